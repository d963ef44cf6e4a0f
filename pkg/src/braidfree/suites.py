"""
Seeded property suites behind ``braidfree verify``.

Each suite draws its samples from one ``random.Random`` and returns a
``Report``; the first few failing samples are named in the report.
"""

from __future__ import annotations

import random
from typing import Callable

from .braids import BraidWord, apply_braid, automorphism_of, random_braid
from .cyclic import phi_basis, tau, tw_apply_braid, tw_images, tw_recover_braid, wada_action, wada_table
from .dehornoy import Order, Trichotomy, classify_sigma1, compare, sigma1_nonpositive_form
from .ends import act_on_end, compare_ends, end_is_squarefree, generator_end, power_end, thurston_compare, word_times_end
from .freewords import FreeWord, generator, prod_t, z1
from .planarity import orbit_clause_failures, orbit_reduce, planar
from .relations import Report, check_semidirect_identities, check_embedding, check_relations

MAX_FAILURES = 5


class _Collector:
    def __init__(self) -> None:
        self.report = Report()
        self.failed = 0
        self.passed = 0

    def check(self, name: str, ok: bool) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.failed <= MAX_FAILURES:
            self.report.add(name, False)

    def done(self, label: str) -> Report:
        self.report.add(f"{label}: {self.passed} checks passed", self.failed == 0)
        return self.report


def _braid(rng: random.Random, n: int, max_len: int) -> BraidWord:
    return random_braid(rng, n, rng.randint(0, max_len))


def _nonidentity(rng: random.Random, n: int, max_len: int) -> BraidWord:
    while True:
        b = _braid(rng, n, max_len)
        if not automorphism_of(b).is_identity():
            return b


def suite_relations(rng: random.Random, trials: int, max_len: int) -> Report:
    report = Report()
    for n in range(2, 9):
        report.extend(check_relations(n))
    return report


def suite_embedding(rng: random.Random, trials: int, max_len: int) -> Report:
    report = Report()
    for n in range(2, 7):
        report.extend(check_embedding(n))
    return report


def suite_semidirect(rng: random.Random, trials: int, max_len: int) -> Report:
    report = Report()
    for n in range(1, 7):
        report.extend(check_semidirect_identities(n))
    return report


def suite_trichotomy(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for t in range(trials):
        n = rng.randint(2, 5)
        b = _braid(rng, n, max_len)
        cls = classify_sigma1(b)
        c.check(f"trial {t}: mirror", classify_sigma1(~b) is cls.mirror())
        fixed = apply_braid(generator(1, n), b).letters == (1,)
        c.check(f"trial {t}: neutral iff t1 fixed", (cls is Trichotomy.NEUTRAL) == fixed)
        if cls is not Trichotomy.POSITIVE:
            form = sigma1_nonpositive_form(b)
            c.check(f"trial {t}: no sigma_1 in form", 1 not in form.factors)
            c.check(f"trial {t}: form matches", automorphism_of(form) == automorphism_of(b))
    return c.done("trichotomy")


def suite_order(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for t in range(trials):
        n = rng.randint(2, 5)
        x, y, z, r = (_braid(rng, n, max_len) for _ in range(4))
        xy, yx = compare(x, y), compare(y, x)
        c.check(f"trial {t}: antisymmetry", xy.sign == -yx.sign)
        c.check(f"trial {t}: right invariance", compare(x * r, y * r) is xy)
        if xy is Order.LT and compare(y, z) is Order.LT:
            c.check(f"trial {t}: transitivity", compare(x, z) is Order.LT)
    for n in range(2, 6):
        for i in range(1, n):
            c.check(f"sigma_{i} > 1 in B_{n}", compare(BraidWord(n, (i,)), BraidWord(n, ())) is Order.GT)
    return c.done("order")


def suite_ends_order(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for t in range(trials):
        n = rng.randint(2, 5)
        x, y = _braid(rng, n, max_len), _braid(rng, n, max_len)
        c.check(f"trial {t}: thurston = dehornoy", thurston_compare(x, y) is compare(x, y))
        e1 = act_on_end(generator_end(rng.randint(1, n), n), _braid(rng, n, 4))
        e2 = act_on_end(generator_end(rng.randint(1, n), n, -1), _braid(rng, n, 4))
        b = _braid(rng, n, max_len)
        c.check(f"trial {t}: end action keeps order", compare_ends(e1, e2) is compare_ends(act_on_end(e1, b), act_on_end(e2, b)))
    return c.done("ends-order")


def suite_squarefree(rng: random.Random, trials: int, max_len: int) -> Report:
    """
    Orbit words of t_1 avoid squares and the two forbidden prefixes for every
    n; the end t_k^b z_1^oo is only checked for n >= 3, since for n <= 2 the
    word can cancel into z_1^oo and leave a square (sigma_1^2 in B_2).
    """
    c = _Collector()
    for t in range(trials):
        n = rng.randint(2, 6)
        b = _braid(rng, n, max_len)
        a = automorphism_of(b)
        tail = power_end(z1(n))
        for k in range(1, n + 1):
            image = a.apply(generator(k, n))
            c.check(f"trial {t}: t_{k}^b clauses", not orbit_clause_failures(image))
            if n >= 3:
                c.check(f"trial {t}: t_{k}^b z_1^oo squarefree", end_is_squarefree(word_times_end(image, tail)))
    return c.done("squarefree")


def suite_planar_closure(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for t in range(trials):
        n = rng.randint(2, 5)
        k = rng.randint(0, n)
        w = apply_braid(prod_t(1, k, n), _braid(rng, n, max_len))
        b = _braid(rng, n, max_len)
        image = apply_braid(w, b)
        c.check(f"trial {t}: image planar", planar(image))
        kk, phi = orbit_reduce(image)
        c.check(f"trial {t}: orbit witness", kk == k and apply_braid(image, phi) == prod_t(1, k, n))
    return c.done("planar-closure")


def suite_torsion_recovery(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for t in range(trials):
        m = rng.choice((2, 3, 4))
        n = rng.randint(2, 5)
        b = _braid(rng, n, max_len)
        images = tw_images(b, m)
        back = tw_recover_braid(images)
        c.check(f"trial {t}: recovered braid equals b", automorphism_of(back) == automorphism_of(b))
        if not automorphism_of(b).is_identity():
            c.check(f"trial {t}: some tau_i moves", any(images[i] != tau(i + 1, m, n) for i in range(n)))
    return c.done("torsion recovery")


def suite_wada_faithful(rng: random.Random, trials: int, max_len: int) -> Report:
    c = _Collector()
    for n in range(1, 6):
        for variant in (2, 3, 4):
            for i in range(1, n + 1):
                got = [wada_action(FreeWord(n, (k,)), BraidWord(n + 1, (i,)), variant).letters for k in range(1, n + 1)]
                c.check(f"variant {variant} table, n={n}, sigma_{i}", got == [tuple(x) for x in wada_table(variant, n, i)])
    for t in range(trials):
        n = rng.randint(2, 4)
        b = _nonidentity(rng, n + 1, max_len)
        basis = phi_basis(2, n)
        c.check(f"trial {t}: basis moved", any(tw_apply_braid(x.underlying, b) != x.underlying for x in basis))
    return c.done("wada-faithful")


SUITES: dict[str, Callable[[random.Random, int, int], Report]] = {
    "relations": suite_relations,
    "magnus": suite_embedding,
    "lemma52": suite_semidirect,
    "trichotomy": suite_trichotomy,
    "order": suite_order,
    "ends-order": suite_ends_order,
    "squarefree": suite_squarefree,
    "planar-closure": suite_planar_closure,
    "humphries": suite_torsion_recovery,
    "wada-faithful": suite_wada_faithful,
}


def run_suite(name: str, seed: int = 0, trials: int = 200, max_len: int = 10) -> Report:
    return SUITES[name](random.Random(seed), trials, max_len)
