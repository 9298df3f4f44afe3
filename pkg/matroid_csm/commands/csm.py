"""The ``csm`` command: one CSM cycle as a canonical document."""

import logging
from typing import List

from matroid_csm.commands.parsing import cycle_to_document
from matroid_csm.models.schemas import CycleDocument
from matroid_csm.services.bergman import csm_cycle
from matroid_csm.services.matroid import Matroid

logger = logging.getLogger(__name__)


def run_csm(matroid: Matroid, k: int) -> CycleDocument:
    """Compute csm_k(M) and serialize it.

    Args:
        matroid: The matroid.
        k: Cycle dimension, 0 <= k <= r(M) - 1.

    Returns:
        CycleDocument with the nonzero weights in canonical chain order;
        the entry list is empty when M has a loop.

    Raises:
        InvalidDimensionError: If k is out of range.
    """
    cycle = csm_cycle(matroid, k)
    logger.info("csm_%d(%r) has %d nonzero cones", k, matroid, len(cycle))
    return cycle_to_document(cycle)


def format_cycle_table(document: CycleDocument) -> str:
    lines: List[str] = [f"ambient={document.ambient} dim={document.dim}"]
    for entry in document.entries:
        chain = " < ".join("{" + ",".join(str(i) for i in subset) + "}" for subset in entry.chain)
        lines.append(f"{entry.weight:>6}  ({chain})")
    if not document.entries:
        lines.append("(empty cycle)")
    return "\n".join(lines)
