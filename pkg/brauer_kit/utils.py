"""
# Hilfsfunktionen

Gemeinsame Bausteine aller Module: Logger, Budget- und Thread-Konfiguration,
Union-Find über Knotennummern, exakte Brüche und gemischt-radixe Indizes
für Tensorbasen (linker Tensorfaktor = höchstwertige Stelle).
"""

import os
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, TypeVar

import loguru
import numpy as np

from brauer_kit.base import BudgetError

logger = loguru.logger

ENV_BUDGET = "BRAUER_KIT_BUDGET"
DEFAULT_BUDGET = 20000

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class Settings:
    max_entries: int = DEFAULT_BUDGET
    threads: int = 1

    @classmethod
    def from_env(cls) -> "Settings":
        raw = os.environ.get(ENV_BUDGET)
        if raw is None:
            return cls()
        try:
            budget = int(raw)
        except ValueError:
            raise ValueError(f"{ENV_BUDGET} muss eine ganze Zahl sein. Aktuell: {raw!r}")
        return cls(max_entries=budget)


_active = Settings.from_env()


def settings() -> Settings:
    return _active


def configure(max_entries: int | None = None, threads: int | None = None) -> Settings:
    global _active
    changes: dict[str, int] = {}
    if max_entries is not None:
        changes["max_entries"] = max_entries
    if threads is not None:
        if threads < 1:
            raise ValueError(f"Mindestens ein Thread erforderlich. Aktuell: {threads}")
        changes["threads"] = threads
    _active = replace(_active, **changes)
    return _active


@contextmanager
def override(**changes: int) -> Iterator[Settings]:
    global _active
    previous = _active
    try:
        yield configure(**changes)
    finally:
        _active = previous


def check_budget(entries: int, what: str) -> None:
    budget = settings().max_entries
    if entries > budget:
        raise BudgetError(
            f"{what} benötigt {entries} Matrixeinträge, Budget ist {budget} "
            f"(--max-entries oder {ENV_BUDGET} erhöhen)"
        )


def parallel_map(func: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Wendet `func` an; die Reihenfolge des Ergebnisses ist unabhängig von der Threadzahl."""
    items = list(items)
    threads = settings().threads
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


class UnionFind:
    def __init__(self, nodes: Iterable[int]):
        self.parents: dict[int, int] = {v: v for v in nodes}

    def root(self, v: int) -> int:
        path = []
        while self.parents[v] != v:
            path.append(v)
            v = self.parents[v]
        for p in path:
            self.parents[p] = v
        return v

    def join(self, v1: int, v2: int) -> None:
        r1 = self.root(v1)
        r2 = self.root(v2)
        if r1 != r2:
            self.parents[max(r1, r2)] = min(r1, r2)

    def groups(self) -> dict[int, list[int]]:
        result: dict[int, list[int]] = {}
        for v in self.parents:
            result.setdefault(self.root(v), []).append(v)
        return result


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"Kein exakter Skalar: {value!r} ({type(value)})")


def format_fraction(value: Fraction) -> str:
    return str(to_fraction(value))


def flat_index(digits: tuple[int, ...], dim: int) -> int:
    if not digits:
        return 0
    return int(np.ravel_multi_index(digits, (dim,) * len(digits)))


def digits_of(index: int, dim: int, length: int) -> tuple[int, ...]:
    if length == 0:
        return ()
    return tuple(int(d) for d in np.unravel_index(index, (dim,) * length))


def tensor_size(dim: int, length: int) -> int:
    return dim**length
