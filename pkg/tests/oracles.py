"""Independent oracles: naive word rewriting for E(n) and D(E(n)).

Nothing here uses the bitmask tables of the package. Words are tuples of
letters ("C",), ("X", k), ("c",), ("x", k); the normal form is
C^j X_P c^l x_Q with indices ascending, reached by adjacent swaps that apply
the defining relations one at a time.
"""

from __future__ import annotations

from collections import defaultdict


def _rank(letter):
    kind = letter[0]
    base = {"C": 0, "X": 1, "c": 2, "x": 3}[kind]
    return (base, letter[1] if len(letter) > 1 else 0)


def _step(word):
    """Rewrite the first offending adjacent pair; None if already normal."""
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        pre, post = word[:i], word[i + 2:]
        if a == b:
            if a[0] in "Cc":
                return [(pre + post, 1)]
            return []  # X_k^2 = x_k^2 = 0
        if _rank(a) < _rank(b):
            continue
        if a == ("c",) and b == ("C",):
            return [(pre + (b, a) + post, 1)]
        if a[0] == "x" and b[0] == "X":
            out = [(pre + (b, a) + post, -1)]
            if a[1] == b[1]:
                out += [(pre + post, 1), (pre + (("C",), ("c",)) + post, -1)]
            return out
        # every other out-of-order pair anticommutes
        return [(pre + (b, a) + post, -1)]
    return None


def normalize(terms: dict) -> dict:
    """{word: coeff} -> {normal word: coeff}."""
    todo = dict(terms)
    done: dict = defaultdict(int)
    while todo:
        word, v = todo.popitem()
        if not v:
            continue
        nxt = _step(word)
        if nxt is None:
            done[word] += v
            continue
        for w, s in nxt:
            todo[w] = todo.get(w, 0) + s * v
    return {w: v for w, v in done.items() if v}


def word_of_en(E, idx):
    i, pm = E.decode(idx)
    return (("c",),) * i + tuple(("x", k) for k in range(1, E.n + 1) if pm >> (k - 1) & 1)


def word_of_double(D, idx):
    j, P, l, Q = D.decode(idx)
    return ((("C",),) * j + tuple(("X", k) for k in range(1, D.n + 1) if P >> (k - 1) & 1)
            + (("c",),) * l + tuple(("x", k) for k in range(1, D.n + 1) if Q >> (k - 1) & 1))


def to_elem(alg, terms, word_to_index):
    return alg.elem({word_to_index[w]: alg.field(v) for w, v in terms.items()})


def index_table(alg, word_of):
    return {word_of(alg, i): i for i in range(alg.dim)}


def oracle_mul(alg, word_of, a: int, b: int):
    table = index_table(alg, word_of)
    return to_elem(alg, normalize({word_of(alg, a) + word_of(alg, b): 1}), table)


# Δ(g) = g⊗g for grouplikes; Δ(y) = 1⊗y + y⊗g for (1, g)-primitives
_GROUP = {"x": ("c",), "X": ("C",)}


def _delta_letter(letter):
    if letter[0] in "Cc":
        return {((letter,), (letter,)): 1}
    g = _GROUP[letter[0]]
    return {((), (letter,)): 1, ((letter,), (g,)): 1}


def oracle_coproduct(alg, word_of, idx: int):
    """Product of the generator coproducts in the tensor square, each leg normalized."""
    table = index_table(alg, word_of)
    acc = {((), ()): 1}
    for letter in word_of(alg, idx):
        new: dict = defaultdict(int)
        for (l1, l2), v in acc.items():
            for (m1, m2), s in _delta_letter(letter).items():
                for w1, a in normalize({l1 + m1: 1}).items():
                    for w2, b in normalize({l2 + m2: 1}).items():
                        new[(w1, w2)] += v * s * a * b
        acc = {k: v for k, v in new.items() if v}
    F = alg.field
    return {(table[w1], table[w2]): F(v) for (w1, w2), v in acc.items()}


def oracle_antipode(alg, word_of, idx: int):
    """S(g) = g, S(y) = -y g for (1, g)-primitives, extended anti-multiplicatively."""
    table = index_table(alg, word_of)
    acc = {(): 1}
    for letter in word_of(alg, idx):
        if letter[0] in "Cc":
            img = {(letter,): 1}
        else:
            img = {(letter, _GROUP[letter[0]]): -1}
        new: dict = defaultdict(int)
        for w, v in acc.items():
            for u, s in img.items():
                new[u + w] += v * s
        acc = normalize(new)
    return to_elem(alg, acc, table)
