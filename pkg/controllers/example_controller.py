"""Controller for verify-example."""

from rich.console import Console
from rich.table import Table

from constants import CheckKinds
from errors import InvalidInputError, VerificationError
from messages import Colors, FormatTemplates, InfoMessages, SuccessMessages
from models.orbit import CTCertificate
from models.report import RunReport
from services.classification_service import ClassificationService

console = Console()


class ExampleController:
    """Verify one named cluster-tilting example and print its transcript."""

    def __init__(self, classification_service: ClassificationService) -> None:
        self.classification_service = classification_service

    def verify(self, name: str, fmt: str = "table") -> RunReport:
        try:
            certificate, summands = self.classification_service.verify_example(name)
        except (InvalidInputError, VerificationError) as e:
            console.print(str(e), style=Colors.ERROR)
            raise

        result = certificate.to_dict()
        result["nakayama_summands"] = None if summands is None else [m.to_list() for m in summands]
        report = RunReport(command="verify-example", inputs={"name": name}, results=[result])

        if fmt == "table":
            self._render(certificate)
            console.print(
                SuccessMessages.EXAMPLE_VERIFIED.format(name=certificate.certificate_id, count=len(certificate.objects), d=certificate.d),
                style=Colors.SUCCESS,
            )
            if summands is not None:
                n = certificate.diagram.rank
                console.print(SuccessMessages.NAKAYAMA_SIDE_VERIFIED.format(name=certificate.certificate_id, n=n), style=Colors.SUCCESS)
        self.classification_service.save([certificate])
        return report

    def _render(self, certificate: CTCertificate) -> None:
        header = InfoMessages.EXAMPLE_HEADER.format(
            name=certificate.certificate_id, diagram=certificate.diagram.name, d=certificate.d
        )
        console.print(header, style=Colors.HEADER)
        objects = ", ".join(FormatTemplates.OBJECT.format(vertex=o.vertex, twist=o.twist_mod) for o in certificate.objects)
        console.print(f"\t{objects}")

        table = Table(title=InfoMessages.TRANSCRIPT_HEADER, title_style=Colors.HEADER)
        for column in ("kind", "pair", "degree", "value"):
            table.add_column(column)
        for check in certificate.checks:
            style = ""
            if check.kind in (CheckKinds.LEFT_WITNESS, CheckKinds.RIGHT_WITNESS):
                style = Colors.INFO
            pair = " ".join(FormatTemplates.OBJECT.format(vertex=p[0], twist=p[1]) for p in check.pair)
            table.add_row(check.kind, pair, str(check.degree), str(check.value), style=style)
        console.print(table)
