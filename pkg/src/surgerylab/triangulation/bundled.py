"""Triangulation files shipped with the package."""
from importlib import resources
from pathlib import Path

from .core import IdealTriangulation, parse_triangulation

BUNDLED = {
    "figure_eight": "figure_eight.tri",
    "figure_eight_sister": "figure_eight_sister.tri",
    "magic": "magic.tri",
}
ALIASES = {
    "fig8": "figure_eight",
    "figure8": "figure_eight",
    "sister": "figure_eight_sister",
    "fig8_sister": "figure_eight_sister",
}


def bundled_name(name: str):
    """Canonical bundled name for ``name`` (with or without ``.tri``), or None."""
    stem = Path(name).name
    if stem.endswith(".tri"):
        stem = stem[:-4]
    stem = ALIASES.get(stem, stem)
    return stem if stem in BUNDLED else None


def bundled_text(name: str) -> str:
    key = bundled_name(name)
    if key is None:
        raise KeyError(f"no bundled triangulation {name!r}; "
                       f"known: {', '.join(sorted(BUNDLED))}")
    return resources.files(__package__).joinpath("data", BUNDLED[key]).read_text()


def load_bundled(name: str) -> IdealTriangulation:
    return parse_triangulation(bundled_text(name))


def magic_available() -> bool:
    try:
        load_bundled("magic")
    except (KeyError, FileNotFoundError, ValueError):
        return False
    return True
