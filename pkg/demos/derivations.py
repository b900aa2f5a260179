"""The derivation checker and the counterexample search at work.

First every bundled derivation is re-checked step by step. Then a
plausible-looking non-theorem goes through the counterexample search,
which certifies its refutation by replaying the found valuation on a
freshly built tower.
"""

from bayesalg.dbl import (
    build_corpus,
    check_derivation,
    format_sequent,
    holds,
    parse_sequent,
    search_counterexample,
)
from bayesalg.bayes import Tower
from bayesalg.boolalg import FiniteBooleanAlgebra

corpus = build_corpus()
print(f"checking the bundled corpus ({len(corpus)} derivations):")
for name, derivation in corpus.items():
    reports = check_derivation(derivation)
    assert all(step.ok for step in reports)
    plural = "step" if len(reports) == 1 else "steps"
    print(f"  {name}: ok ({len(reports)} {plural}),"
          f" concludes {format_sequent(derivation.conclusion)}")

print("\na non-theorem: [x]y <-> y (conditioning would never matter)")
sequent = parse_sequent("[x]y <-> y")
found = search_counterexample(sequent)
assert found is not None
witness = found.describe()
print(f"  refuted over atoms {', '.join(witness['atoms'])} with "
      + ", ".join(f"{k} = {v}" for k, v in witness["assignment"].items()))

replay = Tower(FiniteBooleanAlgebra(found.tower.base.atoms))
assert not holds(replay, found.valuation.assignment, sequent)
print("  the witness replays on an untouched tower, so the refutation"
      " does not depend on search-time state.")

print("\nthe axioms themselves survive the same search:")
for text in ("[x](y -> z) -> ([x]y -> [x]z)",
             "[x]y -> (x -> y)",
             "[x]~y <-> ~[x]y"):
    assert search_counterexample(parse_sequent(text)) is None
    print(f"  no counterexample: {text}")
