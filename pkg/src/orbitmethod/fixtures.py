"""Representation-theoretic tables for the PGL(2) inner class at lambda = rho.

These are transcribed facts rather than computations: which representation a
complete geometric parameter names, and how the standard representations
decompose.  They back the comparison between the sheaf side and the
representation side.
"""

from __future__ import annotations

from fractions import Fraction

from .geoparams import CompleteGeometric, StratumPoset, stratify_orbit
from .lparams import (
    FORM_GROUP,
    CompleteLanglandsParameter,
    lam_a,
    packet_labels,
    pgl2_inner_class,
    representation_label,
    short_name,
)
from .sheafk import ChangeOfBasis

RHO = lam_a(Fraction(1, 2))


def rho_poset() -> StratumPoset:
    return stratify_orbit(RHO, pgl2_inner_class())


def resolve(poset: StratumPoset, cp: CompleteGeometric) -> str:
    """Name of the irreducible representation attached to a complete parameter."""
    sid, tau = cp
    p = poset.stratum(sid).parameter
    label = representation_label(CompleteLanglandsParameter(p, tau))
    name = short_name(label)
    if name.startswith("discrete series"):
        name = "discrete series"
    return f"{name} of {FORM_GROUP[label.real_form]}"


def resolve_packet(poset: StratumPoset, cps) -> list[str]:
    return [resolve(poset, cp) for cp in cps]


# Standard representations at rho and their composition factors: the spherical
# (non-spherical) principal series is the trivial (sign) representation plus the
# discrete series; discrete series and the compact trivial rep are irreducible.
STANDARD_NAMES = {
    ("N", 0): "spherical principal series of G_s",
    ("S", 0): "non-spherical principal series of G_s",
    ("U", 0): "discrete series of G_s",
    ("U", 1): "triv of G_c",
}

STANDARD_COMPOSITION = {
    ("N", 0): {("N", 0): 1, ("U", 0): 1},
    ("S", 0): {("S", 0): 1, ("U", 0): 1},
    ("U", 0): {("U", 0): 1},
    ("U", 1): {("U", 1): 1},
}


def m_r_from_representations(poset: StratumPoset) -> ChangeOfBasis:
    """m_r read off the composition series of the standard representations."""
    from .geoparams import complete_parameters_of

    index = tuple(complete_parameters_of(poset))
    rows = tuple(tuple(STANDARD_COMPOSITION[r].get(c, 0) for c in index) for r in index)
    return ChangeOfBasis(index, rows, "m_r")


# Expected outputs of the worked example, in the basis order (N,triv), (S,triv), (U,triv), (U,sgn).
EXPECTED_MG = ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (0, 0, 0, 1))
EXPECTED_MR = ((1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1))
EXPECTED_CC = {("U", 0): (0, 0, 1), ("U", 1): (1, 1, 1), ("N", 0): (1, 0, 0), ("S", 0): (0, 1, 0)}
EXPECTED_ARTHUR = {
    "psi+": ("triv of G_s", "triv of G_c"),
    "psi-": ("sgn of G_s", "triv of G_c"),
}
ARTHUR_STRATUM = {"psi+": "N", "psi-": "S"}


def langlands_rows(a) -> list[dict]:
    """Rows of the PGL(2) table at infinitesimal character diag(a, -a)."""
    from .lparams import (
        centralizer_label,
        enumerate_parameters,
        format_lambda,
        format_y,
    )

    rows = []
    for p in enumerate_parameters(pgl2_inner_class(), a):
        labels = {lab.real_form: lab.description for lab in packet_labels(p)}
        rows.append({
            "lambda": format_lambda(p.lam),
            "y": format_y(p),
            "split": labels.get("split", "∅"),
            "compact": labels.get("compact", "∅"),
            "centralizer": centralizer_label(p),
        })
    return rows
