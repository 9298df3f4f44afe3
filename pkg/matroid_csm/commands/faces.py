"""The ``faces`` command: f-vector of the matroid polytope."""

import logging

from matroid_csm.models.schemas import FacesReport
from matroid_csm.services.matroid import Matroid, elements
from matroid_csm.services.polytope import face_dimension, f_vector

logger = logging.getLogger(__name__)


def run_faces(name: str, matroid: Matroid) -> FacesReport:
    return FacesReport(
        matroid=name,
        dim=face_dimension(matroid),
        f_vector=list(f_vector(matroid)),
        components=[list(elements(c)) for c in matroid.connected_components],
    )


def format_faces_table(report: FacesReport) -> str:
    counts = " ".join(f"f{d}={count}" for d, count in enumerate(report.f_vector))
    components = " ".join("{" + ",".join(map(str, c)) + "}" for c in report.components)
    return f"{report.matroid}: dim {report.dim}\n{counts}\ncomponents {components}"
