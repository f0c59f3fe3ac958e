"""YAML loader and registry for the theorem catalog."""

from functools import cache
from importlib.resources import files
from pathlib import Path

import yaml

from rainbowforge.models.bounds import BoundReport, TheoremEntry

CATALOG_RESOURCE = "theorems.yaml"


class TheoremRegistry:
    """Every theorem label a report may cite, with its statement."""

    def __init__(self) -> None:
        self.theorems: dict[str, TheoremEntry] = {}

    @classmethod
    def default(cls) -> "TheoremRegistry":
        """The catalog shipped with the package."""
        registry = cls()
        registry.load_text(files("rainbowforge.catalog").joinpath(CATALOG_RESOURCE).read_text())
        return registry

    def load_file(self, path: Path) -> None:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Theorem catalog not found: {path}")
        self.load_text(path.read_text())

    def load_text(self, text: str) -> None:
        data = yaml.safe_load(text)
        if data is None:
            return
        for entry_data in data.get("theorems", []):
            entry = TheoremEntry.model_validate(entry_data)
            if entry.label in self.theorems:
                raise ValueError(f"Duplicate theorem label: {entry.label}")
            self.theorems[entry.label] = entry

    def get(self, label: str) -> TheoremEntry:
        if label not in self.theorems:
            raise KeyError(f"Unknown theorem: {label}")
        return self.theorems[label]

    def labels(self) -> list[str]:
        return list(self.theorems)

    def for_colors(self, t: int) -> list[TheoremEntry]:
        """Entries that concern t colors, plus those stated for every t."""
        return [e for e in self.theorems.values() if not e.colors or t in e.colors]

    def validate_sources(self, report: BoundReport) -> list[str]:
        """Source labels of a report that the catalog does not know."""
        return [label for label in report.sources if label not in self.theorems]


@cache
def default_registry() -> TheoremRegistry:
    return TheoremRegistry.default()
