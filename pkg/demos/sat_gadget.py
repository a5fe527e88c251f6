#!/usr/bin/env python3
"""From a CNF formula to a membership instance and back.

Builds the hardness gadget for a small formula over the synthesized
9-element band, walks through the tuple layout, and round-trips a
satisfying assignment through a witnessing generator word.
"""

from bandsmp import (
    SatInstance,
    assignment_to_word,
    format_instance,
    member_closure,
    parse_dimacs,
    sat_oracle,
    sat_to_smp,
    verify_word,
    word_to_assignment,
)


def show(out):
    print(f"arity {out.instance.gens.n} = {out.num_clauses} clause coordinate(s)"
          f" + 2*{out.num_vars} control coordinates")
    for role, gen in zip(out.roles, out.instance.gens.members):
        print(f"  {role:>5} = {tuple(v + 1 for v in gen)}")
    print(f"  target = {tuple(v + 1 for v in out.instance.target)}")


def main():
    print("== A satisfiable formula: (x1 or ~x2) and (x2) ==")
    text = "p cnf 2 2\n1 -2 0\n2 0\n"
    sat = parse_dimacs(text)
    out = sat_to_smp(sat)
    print(f"gadget band: {out.band.name}, witness {out.witness}")
    show(out)
    member = member_closure(out.instance.gens, out.instance.target)
    print("target generated:", member, "| formula satisfiable:", sat_oracle(sat))

    print()
    print("assignment x1=T, x2=T  ->  word:", end=" ")
    word = assignment_to_word(out, [True, True])
    print(word, "| verifies:", verify_word(out.instance.gens, word, out.instance.target))
    print("word back to assignment:", word_to_assignment(out, word))
    bad = assignment_to_word(out, [True, False])  # falsifies clause 2
    print("assignment x1=T, x2=F  ->  verifies:",
          verify_word(out.instance.gens, bad, out.instance.target))

    print()
    print("== An unsatisfiable formula: (x1) and (~x1) ==")
    sat = SatInstance(1, (frozenset({1}), frozenset({-1})))
    out = sat_to_smp(sat)
    show(out)
    print("target generated:", member_closure(out.instance.gens, out.instance.target),
          "| formula satisfiable:", sat_oracle(sat))

    print()
    print("== The emitted instance file ==")
    print(format_instance(out.instance), end="")


if __name__ == "__main__":
    main()
