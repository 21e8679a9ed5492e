"""The figure surfaces shipped as fixtures, with their captions' data."""
from dataclasses import dataclass
from importlib import resources


@dataclass(frozen=True)
class Figure:
    name: str
    stratum: str
    label: str
    d: int
    hyperelliptic: bool


FIGURES = (
    Figure("fig1", "H(4)", "hyp", 5, True),
    Figure("fig2", "H(3,3)", "hyp", 4, True),
    Figure("fig3", "H(3,3)", "hyp", 8, True),
    Figure("fig4", "H(6)", "odd", 7, False),
    Figure("fig5", "H(2,2)", "hyp", 6, True),
    Figure("fig6", "H(6)", "even", 7, False),
    Figure("fig7", "H(5,3,3,1)", "conn", 6, False),
    Figure("fig8", "H(1,1,1,1)", "conn", 8, False),
)


def fixture_path(filename):
    return resources.files("stratumforge") / "fixtures" / filename


def fixture_text(filename):
    return fixture_path(filename).read_text()
