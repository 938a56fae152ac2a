"""Controller for emit-ar-quiver."""

import json
from typing import List, Optional, Set, Tuple

from rich.console import Console

from errors import InvalidInputError
from messages import Colors, ErrorMessages
from models.report import RunReport
from services.classification_service import ClassificationService
from services.root_data import coxeter_number, default_orientation, dynkin_diagram
from utils.render import ARQuiverLayout, to_ascii, to_dot, to_json_dict

console = Console()

FORMATS = ("dot", "json", "ascii")


class QuiverController:
    """Draw the AR quiver of D^b(kQ) over a window of twists, optionally marking a certificate."""

    def __init__(self, classification_service: ClassificationService) -> None:
        self.classification_service = classification_service

    def emit(
        self,
        family: str,
        rank: int,
        window: Optional[int] = None,
        marked: Optional[str] = None,
        fmt: str = "dot",
    ) -> RunReport:
        try:
            diagram = dynkin_diagram(family, rank)
            h = coxeter_number(diagram)
            window = 2 * (h - 1) if window is None else window
            if window < 1:
                raise InvalidInputError(ErrorMessages.BAD_WINDOW.format(window=window))
            points: Set[Tuple[int, int]] = set()
            if marked:
                certificate = self.classification_service.resolve(marked)
                if certificate.diagram != diagram:
                    raise InvalidInputError(
                        ErrorMessages.MARKED_WRONG_DIAGRAM.format(
                            certificate_id=marked, got=certificate.diagram.name, expected=diagram.name
                        )
                    )
                classes = {(o.vertex, o.twist_mod) for o in certificate.objects}
                points = {(i, l) for i in diagram.vertices for l in range(window) if (i, l % (h - 1)) in classes}
        except InvalidInputError as e:
            console.print(str(e), style=Colors.ERROR)
            raise

        layout = ARQuiverLayout(default_orientation(diagram), window, points)
        if fmt == "dot":
            content = to_dot(layout, f"{diagram.name} window {window}")
        elif fmt == "ascii":
            content = to_ascii(layout)
        else:
            content = json.dumps(to_json_dict(layout), indent=2, sort_keys=True) + "\n"

        marked_points: List[List[int]] = [list(p) for p in sorted(layout.marked)]
        return RunReport(
            command="emit-ar-quiver",
            inputs={"family": diagram.family, "rank": diagram.rank, "window": window, "marked": marked, "format": fmt},
            results=[{"marked_points": marked_points, "content": content}],
        )
