"""Verification suites: enumeration against closed forms, exact identities,
and oracle agreement.

Each suite returns a flat list of check dicts; a worker-pool size above 1
fans independent cells out to processes, and results come back in
submission order so output never depends on the pool size.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor

from . import etale, quadforms, ramified
from .constructions import sample_bielliptic_spec
from .gf2 import SymplecticSpace
from .report import check


def _run_cells(worker, cells, threads: int) -> list[dict]:
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            blocks = list(pool.map(worker, cells))
    else:
        blocks = [worker(cell) for cell in cells]
    return [c for block in blocks for c in block]


def _counts_cell(cell: tuple[int, int, int, int]) -> list[dict]:
    b, r, N, seed = cell
    if b == 0:
        spec = ramified.RamifiedCoverSpec.rational(r)
    elif b == 1:
        spec = sample_bielliptic_spec(r, N=N, seed=seed * 1000 + r)
    else:
        spec = ramified.RamifiedCoverSpec.generic(b, r)
    chars = ramified.enumerate_theta_chars(spec)
    parities = [ramified.parity(spec, tc) for tc in chars]
    lb = sum(1 for tc, p in zip(chars, parities) if p == 0 and tc.subset_size < r)
    tag = f"b={b},r={r}"
    return [
        check(f"total[{tag}]", ramified.count_total(b, r), len(chars)),
        check(f"distinct[{tag}]", ramified.count_total(b, r), len(set(chars))),
        check(f"even[{tag}]", ramified.count_even(b, r), parities.count(0)),
        check(f"odd[{tag}]", ramified.count_odd(b, r), parities.count(1)),
        check(f"vanishing_lb[{tag}]", ramified.count_vanishing_lb(b, r), lb),
    ]


def counts_suite(max_b: int = 3, max_r: int = 6, N: int = 240, seed: int = 0, threads: int = 1) -> list[dict]:
    """Enumerated totals, parities and guaranteed vanishing counts against
    the closed forms, for every base genus and branch half-count in range."""
    cells = [(b, r, N, seed) for b in range(max_b + 1) for r in range(1, max_r + 1)]
    return _run_cells(_counts_cell, cells, threads)


def identities_suite(max_r: int = 30) -> list[dict]:
    """The exact fourth-roots-of-unity filter identity for each r."""
    return [
        check(f"binomial_identity[r={r}]", True, ramified.binomial_identity_check(r))
        for r in range(1, max_r + 1)
    ]


def _etale_cell(cell: tuple[int, int]) -> list[dict]:
    b, max_count_b = cell
    spec = etale.EtaleCoverSpec.default(b)
    g = spec.g
    checks = []
    if b <= max_count_b:
        chars = etale.enumerate_etale(spec)
        parities = [etale.parity_etale(spec, tc) for tc in chars]
        checks.extend(
            [
                check(f"total[b={b}]", 1 << (g + 1), len(chars)),
                check(f"even[b={b}]", 3 * (1 << (g - 1)), parities.count(0)),
                check(f"odd[b={b}]", 1 << (g - 1), parities.count(1)),
            ]
        )
    checks.append(
        check(
            f"T_size[b={b}]",
            etale.count_vanishing(b),
            len(etale.vanishing_thetanulls(spec)),
        )
    )
    return checks


def etale_suite(max_b: int = 6, max_T_b: int = 8, threads: int = 1) -> list[dict]:
    """Unramified-case counts against the closed forms; vanishing-set sizes
    are cheap and run to a higher genus than the full enumerations."""
    cells = [(b, max_b) for b in range(1, max(max_b, max_T_b) + 1)]
    return _run_cells(_etale_cell, cells, threads)


def syzygetic_suite(max_b: int = 5, closure_max_b: int = 4) -> list[dict]:
    """Every triple from the vanishing set is even; the set lies in the
    all-even affine subspace of dimension g - 1, which is closed under
    triple products."""
    checks = []
    for b in range(2, max_b + 1):
        spec = etale.EtaleCoverSpec.default(b)
        vanishing = etale.vanishing_thetanulls(spec)
        subspace = etale.even_subspace(spec)
        subspace_set = set(subspace)
        odd_triples = sum(
            1
            for triple in itertools.combinations(vanishing, 3)
            if etale.triple_parity(spec, *triple) != 0
        )
        checks.append(check(f"syzygetic[b={b}]", 0, odd_triples))
        checks.append(check(f"subspace_size[b={b}]", 1 << (spec.g - 1), len(subspace)))
        checks.append(
            check(
                f"subspace_even[b={b}]",
                0,
                sum(etale.parity_etale(spec, tc) for tc in subspace),
            )
        )
        checks.append(
            check(
                f"T_in_subspace[b={b}]",
                True,
                all(tc in subspace_set for tc in vanishing),
            )
        )
        if b <= closure_max_b:
            closed = all(
                etale.triple_product(spec, t1, t2, t3) in subspace_set
                for t1 in subspace
                for t2 in subspace
                for t3 in subspace
            )
            checks.append(check(f"subspace_closed[b={b}]", True, closed))
    return checks


def oracle_suite(samples: int = 10000, max_dim: int = 20, seed: int = 0) -> list[dict]:
    """Basis-formula Arf against the exhaustive zero-count oracle:
    every form up to dimension 6, then random forms up to ``max_dim``."""
    checks = []
    for n in (1, 2, 3):
        space = SymplecticSpace(n)
        bad = sum(
            1
            for q in quadforms.all_forms(space)
            if q.arf() != quadforms.arf_by_zero_count(q)
        )
        checks.append(check(f"arf_oracle_exhaustive[dim={2 * n}]", 0, bad))
    rng = random.Random(seed)
    dims = [d for d in range(2, max_dim + 1, 2)]
    bad = 0
    for _ in range(samples):
        dim = rng.choice(dims)
        q = quadforms.QuadraticForm(SymplecticSpace(dim // 2), rng.randrange(1 << dim))
        if q.arf() != quadforms.arf_by_zero_count(q):
            bad += 1
    checks.append(check(f"arf_oracle_random[samples={samples},max_dim={max_dim}]", 0, bad))
    return checks


SUITES = {
    "counts": counts_suite,
    "identities": identities_suite,
    "etale": etale_suite,
    "syzygetic": syzygetic_suite,
    "oracle": oracle_suite,
}
