"""Fixed object catalogs for the three tasks.

The catalogs pin every name/color/shape/category token used anywhere in the
system; scene validation, residual vocabulary, and prompt vocabularies all
derive from them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scene import TaskTag

COLOR_PALETTE = ("red", "green", "blue", "yellow", "orange", "purple", "white", "brown")
SHAPE_TOKENS = ("cube", "triangle", "star", "sphere", "cylinder", "box")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    color: str
    shape: str
    category: str


@dataclass(frozen=True)
class Catalog:
    """Ordered object roster for one task; entry index doubles as object id."""

    task: TaskTag
    entries: tuple[CatalogEntry, ...]

    def entry_by_name(self, name: str) -> CatalogEntry | None:
        for entry in self.entries:
            if entry.name == name:
                return entry
        return None

    def values_of(self, attribute: str) -> tuple[str, ...]:
        """Distinct values of one attribute, in first-seen order."""
        seen: list[str] = []
        for entry in self.entries:
            value = getattr(entry, attribute)
            if value not in seen:
                seen.append(value)
        return tuple(seen)


_BLOCK_COLORS = ("red", "green", "blue", "yellow", "orange", "purple")

_BLOCK = Catalog(
    task=TaskTag.BLOCK,
    entries=tuple(
        CatalogEntry(name=f"{color} cube", color=color, shape="cube", category="block")
        for color in _BLOCK_COLORS
    ),
)

_POLYGON = Catalog(
    task=TaskTag.POLYGON,
    entries=(
        CatalogEntry("red triangle", "red", "triangle", "polygon"),
        CatalogEntry("green triangle", "green", "triangle", "polygon"),
        CatalogEntry("blue triangle", "blue", "triangle", "polygon"),
        CatalogEntry("red star", "red", "star", "polygon"),
        CatalogEntry("green star", "green", "star", "polygon"),
        CatalogEntry("blue star", "blue", "star", "polygon"),
    ),
)

_HOUSEHOLD = Catalog(
    task=TaskTag.HOUSEHOLD,
    entries=(
        CatalogEntry("apple", "red", "sphere", "fruit"),
        CatalogEntry("orange", "orange", "sphere", "fruit"),
        CatalogEntry("lemon", "yellow", "sphere", "fruit"),
        CatalogEntry("lime", "green", "sphere", "fruit"),
        CatalogEntry("red drink", "red", "cylinder", "beverage"),
        CatalogEntry("orange drink", "orange", "cylinder", "beverage"),
        CatalogEntry("yellow drink", "yellow", "cylinder", "beverage"),
        CatalogEntry("green drink", "green", "cylinder", "beverage"),
        CatalogEntry("choco bar", "brown", "box", "snack"),
        CatalogEntry("chips", "yellow", "box", "snack"),
        CatalogEntry("cookie pack", "red", "box", "snack"),
        CatalogEntry("cracker box", "orange", "box", "snack"),
    ),
)

_CATALOGS = {
    TaskTag.BLOCK: _BLOCK,
    TaskTag.POLYGON: _POLYGON,
    TaskTag.HOUSEHOLD: _HOUSEHOLD,
}


def catalog_for(task: TaskTag) -> Catalog:
    return _CATALOGS[task]
