from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sumposet import AmbientRing, FieldSpec, LinearIdeal, PurePowerIdeal

FIXTURES = Path(__file__).resolve().parent / "fixtures"


def lin(ambient: AmbientRing, *rows) -> LinearIdeal:
    return LinearIdeal.from_generators(ambient, list(rows))


def pp(ambient: AmbientRing, exps: dict) -> PurePowerIdeal:
    return PurePowerIdeal.from_exponents(ambient, exps)


@pytest.fixture
def qq() -> FieldSpec:
    return FieldSpec()


@pytest.fixture
def f2() -> FieldSpec:
    return FieldSpec("prime", 2)


@pytest.fixture
def kxy() -> AmbientRing:
    return AmbientRing.make(2, names=("x", "y"))


@pytest.fixture
def kxyz() -> AmbientRing:
    return AmbientRing.make(3, names=("x", "y", "z"))


def triangle_components(ambient=None):
    amb = ambient or AmbientRing.make(3)
    return [pp(amb, {a: 1, b: 1}) for a, b in [(0, 1), (0, 2), (1, 2)]]


def pairs6_components():
    amb = AmbientRing.make(6)
    return [pp(amb, {a: 1, b: 1}) for a, b in [(0, 1), (2, 3), (4, 5)]]


def lyubeznik_components():
    amb = AmbientRing.make(3, names=("x", "y", "z"))
    return [pp(amb, {0: 1, 1: 1}), pp(amb, {0: 1, 2: 1})]


def xyline_components():
    amb = AmbientRing.make(2, names=("x", "y"))
    return [lin(amb, [1, 0]), lin(amb, [0, 1]), lin(amb, [1, -1])]


def xyzarr_components():
    amb = AmbientRing.make(3, names=("x", "y", "z"))
    return [lin(amb, [1, 0, 0], [0, 1, 0]),
            lin(amb, [1, 0, 0], [0, 0, 1]),
            lin(amb, [1, 0, -1], [0, 1, 0])]
