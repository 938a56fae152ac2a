"""Controller for classify-trivext."""

from rich.console import Console
from rich.table import Table

from errors import InvalidInputError
from messages import Colors, InfoMessages, SuccessMessages
from models.report import RunReport
from services.classification_service import ClassificationService
from services.root_data import coxeter_number

console = Console()


class TrivextController:
    """Classify d-representation-finiteness of T(kQ) over a range of d."""

    def __init__(self, classification_service: ClassificationService) -> None:
        self.classification_service = classification_service

    def classify(
        self,
        family: str,
        rank: int,
        d_min: int,
        d_max: int,
        fmt: str = "table",
        exhaustive: bool = False,
    ) -> RunReport:
        try:
            diagram, rows = self.classification_service.classify_trivext(family, rank, d_min, d_max, exhaustive)
        except InvalidInputError as e:
            console.print(str(e), style=Colors.ERROR)
            raise

        report = RunReport(
            command="classify-trivext",
            inputs={"family": diagram.family, "rank": diagram.rank, "d_min": d_min, "d_max": d_max, "exhaustive": exhaustive},
            results=[row.to_dict() for row in rows],
        )
        if fmt == "table":
            self._render(diagram, rows)
        store = self.classification_service.store
        if store is not None:
            count = self.classification_service.save([c for row in rows for c in row.certificates])
            if fmt == "table":
                console.print(SuccessMessages.STORED.format(count=count, path=store.filepath), style=Colors.SUCCESS)
        return report

    def _render(self, diagram, rows) -> None:
        title = InfoMessages.TRIVEXT_HEADER.format(diagram=diagram.name, h=coxeter_number(diagram))
        table = Table(title=title, title_style=Colors.HEADER)
        table.add_column("d", justify="right")
        table.add_column("d-rep. finite")
        table.add_column("certificates", justify="right")
        table.add_column("route")
        for row in rows:
            if row.representation_finite is None:
                verdict = InfoMessages.NOT_ATTEMPTED
                style = Colors.WARNING
            elif row.representation_finite:
                verdict, style = InfoMessages.STATUS_YES, Colors.SUCCESS
            else:
                verdict, style = InfoMessages.STATUS_NO, ""
            table.add_row(str(row.d), verdict, str(len(row.certificates)), row.route, style=style)
        console.print(table)
