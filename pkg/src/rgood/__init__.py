"""Classify spaces as R-good or R-bad in the sense of Bousfield-Kan completion.

Covers R = Z/p and subrings of Q. Inputs are finite presentations (read as
Eilenberg-MacLane spaces), closed surfaces, wedges of circles, RAAG and Artin
graphs, Bestvina-Brady graphs, and a small table of known spaces.
"""

from rgood.engine import (
    Assumption,
    BestvinaBrady,
    CircleWedge,
    EilenbergMacLane,
    EvenArtin,
    Known,
    Raag,
    Surface,
    classify,
    survey,
)
from rgood.presentations import Presentation, parse_presentation, presentation
from rgood.rings import parse_ring
from rgood.verdicts import Status, Verdict

__all__ = [
    "Assumption",
    "BestvinaBrady",
    "CircleWedge",
    "EilenbergMacLane",
    "EvenArtin",
    "Known",
    "Presentation",
    "Raag",
    "Status",
    "Surface",
    "Verdict",
    "classify",
    "parse_presentation",
    "parse_ring",
    "presentation",
    "survey",
]
