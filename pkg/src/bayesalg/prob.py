"""Exact probability on extension towers.

A distribution assigns each atom of one tower stage a nonnegative scalar
mass summing to one; masses are plain rationals or, when null events have
to be smoothed away, rational functions of the infinitesimal ``e``. A
distribution on a stage extends to the next extension stage by the block
rule: the pair atom (w, u) gets mass P(w) * P(u) / P(block(w)), where
block(w) is the set of permitted second components for w. The embedded
copy of the lower stage keeps its probabilities exactly, and the total
mass stays one, so conditional events acquire probabilities consistent
with every stage below.

Consistency with the stages below fixes only the total mass of each
block, not its interior split. The block rule is our completion of that
underdetermined induction: it spreads every block in product form, the
one choice that makes the second coordinate an independent re-run of
the first, and verify_conditional_law plus the acceptance tests pin its
consequences (product law, marginal preservation, independence from the
complement) across whole tower families.

The block rule divides by block masses, so it needs them nonzero. A base
distribution with null atoms is first mixed with an infinitesimal portion
of a strictly positive one: Q = (1 - e) P + e R. Taking standard parts of
the extended masses afterwards recovers ordinary rational probabilities.

The search helper at the bottom shows why the conditional must live in an
extension: already on a three-atom algebra no single element has, across
two given distributions at once, the probability that conditionals are
required to have.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .bayes import Tower
from .boolalg import Atom, Element, FiniteBooleanAlgebra, atom_label
from .field import (
    EPSILON,
    InfinitesimalScalar,
    Polynomial,
    Scalar,
    as_scalar,
    format_scalar,
    parse_scalar,
    standard_part,
)

__all__ = [
    "Distribution",
    "NullEventError",
    "base_distribution",
    "uniform_distribution",
    "prob_of",
    "make_tangible",
    "standard_project",
    "extend_distribution",
    "verify_conditional_law",
    "lewis_candidates",
    "lewis_search",
    "distribution_to_json",
    "distribution_from_json",
]


class NullEventError(ValueError):
    """An event with probability zero was needed as a divisor."""


@dataclass
class Distribution:
    """Atom masses for one stage of a tower."""

    algebra: FiniteBooleanAlgebra
    masses: dict
    stage: int = 0

    def __post_init__(self):
        if set(self.masses) != set(self.algebra.atoms):
            raise ValueError("masses must cover exactly the algebra's atoms")
        total = None
        for atom, mass in self.masses.items():
            mass = as_scalar(mass)
            self.masses[atom] = mass
            if mass < 0:
                raise ValueError(f"negative mass at {atom_label(atom)}")
            total = mass if total is None else total + mass
        if total != 1:
            raise ValueError(f"masses sum to {format_scalar(total)}, not 1")

    def mass(self, atom: Atom) -> Scalar:
        return self.masses[atom]

    def is_strictly_positive(self) -> bool:
        return all(m > 0 for m in self.masses.values())

    def is_rational(self) -> bool:
        return all(isinstance(m, Fraction) for m in self.masses.values())


def base_distribution(
    algebra: FiniteBooleanAlgebra,
    masses: Union[dict, Iterable[Union[Scalar, int, str]]],
    stage: int = 0,
) -> Distribution:
    """Build a distribution from a mapping or an atom-ordered sequence.

    Keys may be atoms or atom labels; values may be scalars or scalar
    text like ``"1/4"`` or ``"(1 - e)/2"``.
    """
    if not isinstance(masses, dict):
        masses = dict(zip(algebra.atoms, masses))
        if len(masses) != len(algebra.atoms):
            raise ValueError("need one mass per atom")
    out = {}
    for key, value in masses.items():
        atom = algebra._label_map.get(key, key) if isinstance(key, str) else key
        if isinstance(value, str):
            value = parse_scalar(value)
        out[atom] = as_scalar(value)
    return Distribution(algebra, out, stage)


def uniform_distribution(algebra: FiniteBooleanAlgebra, stage: int = 0) -> Distribution:
    share = Fraction(1, len(algebra.atoms))
    return Distribution(algebra, {a: share for a in algebra.atoms}, stage)


def prob_of(dist: Distribution, x: Element) -> Scalar:
    dist.algebra._require_own(x)
    total: Scalar = Fraction(0)
    for atom in x.atoms:
        total = total + dist.masses[atom]
    return total


def make_tangible(dist: Distribution, mode: str = "uniform") -> Distribution:
    """Mix in an infinitesimal strictly positive part: Q = (1 - e)P + eR.

    mode "uniform" spreads the witness R evenly; mode "hahn_witness"
    gives the i-th atom (i = 1..n) the mass e^i / (e + ... + e^n), so
    distinct null atoms end up at distinct infinitesimal orders.
    """
    if not dist.is_rational():
        raise ValueError("distribution is already infinitesimal-valued")
    atoms = dist.algebra.atoms
    n = len(atoms)
    if mode == "uniform":
        ref = [InfinitesimalScalar.from_rational(Fraction(1, n))] * n
    elif mode == "hahn_witness":
        norm = Polynomial([1] * n)
        ref = [
            InfinitesimalScalar(Polynomial([0] * i + [1]), norm) for i in range(n)
        ]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    one = InfinitesimalScalar.from_rational(1)
    keep = one - EPSILON
    masses = {
        a: keep * dist.masses[a] + EPSILON * r for a, r in zip(atoms, ref)
    }
    return Distribution(dist.algebra, masses, dist.stage)


def standard_project(dist: Distribution) -> Distribution:
    """Forget the infinitesimal part of every mass."""
    return Distribution(
        dist.algebra,
        {a: standard_part(m) for a, m in dist.masses.items()},
        dist.stage,
    )


def _extend_once(tower: Tower, dist: Distribution) -> Distribution:
    step = tower.step(dist.stage + 1)
    if step.kind == "trivial":
        return Distribution(step.algebra, dict(dist.masses), dist.stage + 1)
    blocks: dict = {}
    for (w, u) in step.algebra.atoms:
        blocks.setdefault(w, []).append(u)
    block_mass = {
        w: prob_of(dist, dist.algebra.element(seconds))
        for w, seconds in blocks.items()
    }
    masses = {}
    for (w, u) in step.algebra.atoms:
        top_mass = dist.masses[w] * dist.masses[u]
        if block_mass[w] == 0:
            if dist.masses[w] == 0:
                masses[(w, u)] = Fraction(0)
                continue
            raise NullEventError(
                f"block of {atom_label(w)} has probability 0; "
                "make the base distribution strictly positive first"
            )
        masses[(w, u)] = top_mass / block_mass[w]
    out = Distribution(step.algebra, masses, dist.stage + 1)
    # the embedded copy of the lower stage keeps its probabilities
    for atom in dist.algebra.atoms:
        assert prob_of(out, tower.push(dist.algebra.atom_element(atom), dist.stage, out.stage)) == dist.masses[atom]
    return out


def extend_distribution(
    tower: Tower,
    dist: Distribution,
    to_stage: Optional[int] = None,
    positivity: str = "error",
) -> Distribution:
    """Extend a distribution up the tower via the block rule.

    positivity says what to do when a zero-mass block is hit: "error"
    raises NullEventError; "uniform" or "hahn_witness" restart from the
    original distribution perturbed by make_tangible in that mode.
    """
    if to_stage is None:
        to_stage = tower.top_index
    if not dist.stage <= to_stage <= tower.top_index:
        raise ValueError(f"cannot extend from stage {dist.stage} to {to_stage}")
    current = dist
    try:
        while current.stage < to_stage:
            current = _extend_once(tower, current)
    except NullEventError:
        if positivity == "error":
            raise
        current = make_tangible(dist, mode=positivity)
        while current.stage < to_stage:
            current = _extend_once(tower, current)
    return current


def verify_conditional_law(
    tower: Tower,
    dist: Distribution,
    x: Element,
    y: Element,
    mode: str = "auto",
    positivity: str = "error",
) -> dict:
    """Check P([x]y) * P(x) == P(x & y) and marginal preservation, exactly.

    x and y are elements of the tower's top algebra; dist may sit at any
    stage at or below the top. Works on a fork, so the tower is unchanged.
    Returns a report with the probabilities involved and two booleans.
    """
    fork = tower.fork()
    at_top = extend_distribution(fork, dist, fork.top_index, positivity)
    if positivity != "error" and not at_top.is_strictly_positive():
        at_top = make_tangible(at_top, mode=positivity)
    value, stage = fork.conditional(x, y, mode=mode)
    at_value = extend_distribution(fork, at_top, stage, positivity)
    p_x = prob_of(at_top, x)
    p_xy = prob_of(at_top, x & y)
    p_value = prob_of(at_value, value)
    marginals = all(
        prob_of(at_value, fork.push(at_top.algebra.atom_element(a), at_top.stage, stage))
        == at_top.masses[a]
        for a in at_top.algebra.atoms
    )
    # corollary: the conditional is independent of the complement of x
    not_x = fork.push(~x, at_top.stage, stage)
    independent = (
        p_value * prob_of(at_top, ~x) == prob_of(at_value, not_x & value)
    )
    return {
        "stage": stage,
        "p_x": p_x,
        "p_x_and_y": p_xy,
        "p_conditional": p_value,
        "p_conditional_std": standard_part(p_value),
        "product_matches": p_value * p_x == p_xy,
        "marginals_preserved": marginals,
        "independent_of_complement": independent,
    }


def lewis_candidates(
    algebra: FiniteBooleanAlgebra,
    x: Element,
    y: Element,
    dists: list[Distribution],
) -> list[Element]:
    """Elements whose probability equals P(x & y) / P(x) under every dist.

    A conditional event inside the base algebra would have to be one of
    these simultaneously for all distributions; an empty result shows no
    element of the algebra can play that role.
    """
    out = []
    for k in range(algebra.size()):
        candidate = algebra.element_at(k)
        if all(
            prob_of(d, candidate) * prob_of(d, x) == prob_of(d, x & y)
            for d in dists
        ):
            out.append(candidate)
    return out


def lewis_search(
    algebra: FiniteBooleanAlgebra,
    dists: list[Distribution],
    x: Element,
    y: Element,
) -> Optional[Element]:
    """Brute-force hunt for one element carrying P(y|x) in every dist.

    y itself is tried first, then every element in enumeration order;
    None means no element of the base algebra can stand in for the
    conditional under all supplied distributions simultaneously.
    """
    def fits(candidate: Element) -> bool:
        return all(
            prob_of(d, candidate) * prob_of(d, x) == prob_of(d, x & y)
            for d in dists
        )

    if fits(y):
        return y
    for k in range(algebra.size()):
        candidate = algebra.element_at(k)
        if fits(candidate):
            return candidate
    return None


def distribution_to_json(dist: Distribution) -> dict:
    return {
        "stage": dist.stage,
        "masses": {
            atom_label(a): format_scalar(dist.masses[a])
            for a in dist.algebra.atoms
        },
    }


def distribution_from_json(tower: Tower, data: dict) -> Distribution:
    stage = data.get("stage", 0)
    algebra = tower.algebra(stage)
    return base_distribution(algebra, dict(data["masses"]), stage)
