"""Shared random term generators for property and acceptance tests.

Two flavours: hypothesis strategies for open-ended property tests, and a
plain seeded-``random`` fuzzer where a test needs an exact sample count.
Constant names are restricted to the parseable surface grammar so that
parse-of-print round trips are meaningful.
"""

from __future__ import annotations

import random
import string

from hypothesis import strategies as st

from factgraph.terms import Constant, Function, Integer, String, Term, Tuple

_NAME_FIRST = string.ascii_lowercase
_NAME_REST = string.ascii_lowercase + string.ascii_uppercase + string.digits + "_'"


def _names():
    rest = st.text(alphabet=_NAME_REST, max_size=6)
    return st.builds(lambda a, b: a + b, st.sampled_from(_NAME_FIRST), rest)


def term_strategy(max_leaves: int = 12) -> st.SearchStrategy[Term]:
    leaves = st.one_of(
        st.integers(min_value=-(10**6), max_value=10**6).map(Integer),
        _names().map(Constant),
        st.text(max_size=8).map(String),
    )
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.builds(
                Function,
                _names(),
                st.lists(children, min_size=1, max_size=3).map(tuple),
            ),
            st.lists(children, min_size=0, max_size=3).map(tuple).map(Tuple),
        ),
        max_leaves=max_leaves,
    )


def random_name(rng: random.Random) -> str:
    length = rng.randint(0, 5)
    return rng.choice(_NAME_FIRST) + "".join(
        rng.choice(_NAME_REST) for _ in range(length)
    )


def random_string_value(rng: random.Random) -> str:
    # Bias toward the characters that exercise escaping.
    alphabet = string.ascii_letters + string.digits + ' .,!?"\\\n%(){}'
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 10)))


def random_term(rng: random.Random, depth: int = 4) -> Term:
    kinds = ["int", "const", "str"]
    if depth > 0:
        kinds += ["func", "tuple"]
    kind = rng.choice(kinds)
    if kind == "int":
        return Integer(rng.randint(-(10**6), 10**6))
    if kind == "const":
        return Constant(random_name(rng))
    if kind == "str":
        return String(random_string_value(rng))
    if kind == "func":
        arity = rng.randint(1, 3)
        return Function(
            random_name(rng),
            tuple(random_term(rng, depth - 1) for _ in range(arity)),
        )
    arity = rng.randint(0, 3)
    return Tuple(tuple(random_term(rng, depth - 1) for _ in range(arity)))
