"""Loading and decoding of the shipped reference tables.

The JSON files store term tables with two factor kinds:

    B(a, c) = t^{-1/2} (1 - t) / (1 - q^a t^c)
    Q(a, c) = q^a t^{c - 1/2} (1 - t) / (1 - q^a t^c)

and a ``vpow`` counting half-integral powers of t in the prefactor.  Tests
compare these tables semantically (set and field equality) against the
enumerated objects, never textually.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .pqls import PqlsChain, PqlsPair
from .qt import CharacterElement, LaurentQV, RatQV, factor_poly
from .root_system import RootSystem, parse_word


def load_golden(name: str) -> dict:
    path = resources.files("macpath").joinpath("golden").joinpath(name)
    return json.loads(path.read_text())


def factor_ratqv(kind: str, qexp: int, texp: int) -> RatQV:
    den = factor_poly(qexp, texp)
    if kind == "B":
        num = LaurentQV({(0, -1): Fraction(1), (0, 1): Fraction(-1)})
    elif kind == "Q":
        num = LaurentQV({(qexp, 2 * texp - 1): Fraction(1),
                         (qexp, 2 * texp + 1): Fraction(-1)})
    else:
        raise ValueError(f"unknown factor kind {kind!r}")
    return RatQV(num, den)


def term_ratqv(term: dict) -> RatQV:
    out = RatQV(LaurentQV.v_power(term["vpow"]))
    for f in term["factors"]:
        out = out * factor_ratqv(f["kind"], f["qexp"], f["texp"])
    return out


def character_from_terms(terms: list) -> CharacterElement:
    out = CharacterElement()
    for term in terms:
        out = out + CharacterElement({tuple(term["weight"]): term_ratqv(term)})
    return out


def pair_from_json(rs: RootSystem, data: dict) -> PqlsPair:
    chains = []
    for c in data["chains"]:
        start = parse_word(c["start"], rs)
        labels = tuple(rs.root_index[tuple(s["label"])] for s in c["steps"])
        chain = PqlsChain(start, labels)
        verts = chain.vertices()
        for step, v in zip(c["steps"], verts[1:]):
            if parse_word(step["to"], rs) != v:
                raise ValueError("golden chain is inconsistent")
        chains.append(chain)
    return PqlsPair(chains, [Fraction(t) for t in data["times"]])
