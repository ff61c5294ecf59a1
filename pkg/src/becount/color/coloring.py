from __future__ import annotations

from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ..errors import ColoringError, ParseError


class Coloring:
    """Vertex coloring with contiguous color ids ``0..size-1``.

    Construct with :meth:`from_colors` to renumber arbitrary labels; the
    plain constructor insists the ids are already contiguous.
    """

    def __init__(self, colors: Sequence[int]):
        arr = np.asarray(colors, dtype=np.int64).copy()
        if arr.ndim != 1:
            raise ColoringError("colors must be a flat sequence")
        size = int(arr.max()) + 1 if arr.size else 0
        if arr.size and (arr.min() < 0 or np.bincount(arr, minlength=size).min() == 0):
            raise ColoringError("color ids must be contiguous 0..size-1")
        arr.flags.writeable = False
        self.color = arr
        self.size = size

    @classmethod
    def from_colors(cls, labels: Iterable[int]) -> "Coloring":
        """Renumber arbitrary labels to ``0..k-1``, keeping their sorted order."""
        labels = list(labels)
        remap = {c: i for i, c in enumerate(sorted(set(labels)))}
        return cls([remap[c] for c in labels])

    @property
    def n(self) -> int:
        return int(self.color.shape[0])

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, v: int) -> int:
        return int(self.color[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return np.array_equal(self.color, other.color)

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, size={self.size})"

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.size)]
        for v, c in enumerate(self.color.tolist()):
            out[c].append(v)
        return tuple(tuple(c) for c in out)

    @cached_property
    def class_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR-style ``(class_ptr, class_verts)`` over color ids."""
        order = np.argsort(self.color, kind="stable")
        counts = np.bincount(self.color, minlength=self.size)
        ptr = np.zeros(self.size + 1, dtype=np.int64)
        np.cumsum(counts, out=ptr[1:])
        return ptr, order.astype(np.int64)

    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def restrict(self, vertices: Iterable[int]) -> set[int]:
        """Colors used on ``vertices``."""
        return {int(self.color[v]) for v in vertices}


def format_coloring(phi: Coloring) -> str:
    return "".join(f"{v} {c}\n" for v, c in enumerate(phi.color.tolist()))


def parse_coloring(text: str, n: int | None = None) -> Coloring:
    pairs = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'vertex color', got {raw!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: not an integer in {raw!r}") from None
        if v < 0 or c < 0:
            raise ParseError(f"line {lineno}: negative id in {raw!r}")
        if v in pairs:
            raise ParseError(f"line {lineno}: vertex {v} colored twice")
        pairs[v] = c
    size = n if n is not None else (max(pairs) + 1 if pairs else 0)
    missing = [v for v in range(size) if v not in pairs]
    if missing or any(v >= size for v in pairs):
        raise ParseError(f"coloring does not cover vertices 0..{size - 1} exactly")
    return Coloring.from_colors(pairs[v] for v in range(size))


def read_coloring(path, n: int | None = None) -> Coloring:
    return parse_coloring(Path(path).read_text(encoding="utf-8"), n)


def write_coloring(phi: Coloring, path) -> None:
    Path(path).write_text(format_coloring(phi), encoding="utf-8")
