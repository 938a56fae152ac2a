"""Controller for classify-nakayama."""

from rich.console import Console
from rich.table import Table

from constants import Routes
from errors import InvalidInputError, RouteMismatchError
from messages import Colors, ErrorMessages, InfoMessages, SuccessMessages
from models.report import RunReport
from models.serial import NakayamaAlgebra
from services.classification_service import ClassificationService
from utils.budget import nakayama_budget

console = Console()

MODES = ("numeric", "bruteforce", "both")


class NakayamaController:
    """Per-d verdicts for one symmetric Nakayama algebra, by arithmetic, by search, or both."""

    def __init__(self, classification_service: ClassificationService) -> None:
        self.classification_service = classification_service

    def classify(self, a: int, n: int, d_max: int, mode: str = "both", fmt: str = "table") -> RunReport:
        try:
            algebra = NakayamaAlgebra(a, n)
            if d_max < 2:
                raise InvalidInputError(ErrorMessages.BAD_D_RANGE.format(d_min=2, d_max=d_max))
        except InvalidInputError as e:
            console.print(str(e), style=Colors.ERROR)
            raise

        engine = self.classification_service.nakayama_engine(a, n)
        results = []
        mismatch = None
        for d in range(2, d_max + 1):
            row = {"d": d, "numeric": None, "bruteforce": None, "status": None, "summand_sets": []}
            if mode in ("numeric", "both"):
                row["numeric"] = self.classification_service.numeric_verdict(a, n, d)
            if mode in ("bruteforce", "both"):
                found = engine.enumerate_d_ct(d)
                row["status"] = found.status
                row["bruteforce"] = found.verdict
                row["summand_sets"] = found.to_dict()["summand_sets"]
                if found.status == Routes.NOT_ATTEMPTED and fmt == "table":
                    console.print(
                        InfoMessages.BUDGET_EXCEEDED.format(
                            size=len(algebra.non_projectives()), budget=nakayama_budget(), route=Routes.NOT_ATTEMPTED
                        ),
                        style=Colors.WARNING,
                    )
            if (
                mode == "both"
                and row["bruteforce"] is not None
                and row["bruteforce"] != row["numeric"]
                and mismatch is None
            ):
                mismatch = row
            results.append(row)

        report = RunReport(
            command="classify-nakayama",
            inputs={"a": a, "n": n, "d_max": d_max, "mode": mode},
            results=results,
            ok=mismatch is None,
        )
        if fmt == "table":
            self._render(algebra, results)
        if mismatch is not None:
            message = ErrorMessages.ROUTES_DISAGREE.format(
                a=a, n=n, d=mismatch["d"], numeric=mismatch["numeric"], brute=mismatch["bruteforce"]
            )
            console.print(message, style=Colors.ERROR)
            raise RouteMismatchError(message, witness={"a": a, "n": n, **mismatch})
        if mode == "both" and fmt == "table":
            console.print(SuccessMessages.ROUTES_AGREE.format(a=a, n=n), style=Colors.SUCCESS)
        return report

    def _render(self, algebra: NakayamaAlgebra, results) -> None:
        title = InfoMessages.NAKAYAMA_HEADER.format(a=algebra.a, n=algebra.n, loewy=algebra.loewy_length)
        table = Table(title=title, title_style=Colors.HEADER)
        table.add_column("d", justify="right")
        table.add_column("numeric")
        table.add_column("brute force")
        table.add_column("modules", justify="right")

        def show(value) -> str:
            if value is None:
                return "-"
            return InfoMessages.STATUS_YES if value else InfoMessages.STATUS_NO

        for row in results:
            brute = show(row["bruteforce"])
            if row["status"] == Routes.NOT_ATTEMPTED:
                brute = InfoMessages.NOT_ATTEMPTED
            positive = row["numeric"] or row["bruteforce"]
            table.add_row(
                str(row["d"]),
                show(row["numeric"]),
                brute,
                str(len(row["summand_sets"])),
                style=Colors.SUCCESS if positive else "",
            )
        console.print(table)
