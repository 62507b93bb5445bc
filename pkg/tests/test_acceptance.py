"""Acceptance gate.

Each check prints one PASS/FAIL line.  Under pytest the lines appear in the
terminal summary; ``python tests/test_acceptance.py`` prints them directly.
"""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sfsurgery import heegaard, knotinv, montesinos, seifert, surgery, verify
from sfsurgery.exact import MobiusMap, cf_expand, cf_fold, slope, smith_normal_form
from sfsurgery.montesinos import MontesinosLink
from sfsurgery.seifert import SeifertInvariants, SFSType
from sfsurgery.tangle import SITE_T1, SITE_T2, family_map

from oracles import cyclically_reduced_words, nielsen_primitive_words

RESULTS: dict[int, tuple[bool, str]] = {}
N_RANGE = range(-100, 101)


def _type_of_link(link):
    return seifert.type_of(montesinos.double_branched_cover(link))


def check_t1_sweep():
    t0 = time.perf_counter()
    reports = verify.sweep_family("pretzel-335-t1", -100, 100)
    elapsed = time.perf_counter() - t0
    passed = sum(r.status == "pass" for r in reports)
    for n in N_RANGE:
        link = MontesinosLink.of(0, "2/5", slope(11 * n + 3, -15 * n - 4), "1/3")
        assert _type_of_link(link) == SFSType.of(3, 5, abs(15 * n + 4)), n
    assert passed == 201, passed
    assert elapsed < 1.0, elapsed
    return f"t1 sweep {passed}/201 in {elapsed:.3f}s"


def check_t2_sweep():
    t0 = time.perf_counter()
    reports = verify.sweep_family("pretzel-335-t2", -100, 100)
    elapsed = time.perf_counter() - t0
    passed = sum(r.status == "pass" for r in reports)
    for n in N_RANGE:
        link = MontesinosLink.of(0, "1/4", slope(7 * n + 3, -12 * n - 5), "1/3")
        assert _type_of_link(link) == SFSType.of(3, 4, abs(12 * n + 5)), n
        assert montesinos.determinant(link) == 1, n
    assert passed == 201, passed
    assert elapsed < 1.0, elapsed
    return f"t2 sweep {passed}/201 in {elapsed:.3f}s"


def check_two_route_homology():
    for n in N_RANGE:
        via_surgery = surgery.h1_of_surgery(surgery.two_component_twist_link(1, n, lk=0))
        link = MontesinosLink.of(0, "2/5", slope(11 * n + 3, -15 * n - 4), "1/3")
        via_cover = seifert.h1(montesinos.double_branched_cover(link))
        det = montesinos.determinant(link)
        assert via_surgery.is_trivial and via_cover.is_trivial and det == 1, n
    return "surgery H1, cover H1 and determinant trivial for 201 values"


def check_base_points():
    assert _type_of_link(MontesinosLink.of(0, "2/5", "-3/4", "1/3")) == SFSType.of(3, 4, 5)
    assert _type_of_link(verify.FAMILIES["pretzel-335-t1"].link(0)) == SFSType.of(3, 4, 5)
    k = knotinv.PretzelKnot(-3, 3, 5)
    via_montesinos = montesinos.determinant(MontesinosLink.of(0, "1/3", "-1/3", "-1/5"))
    via_alexander = knotinv.determinant(knotinv.alexander(knotinv.seifert_matrix(k)))
    p, q, r = k.p, k.q, k.r
    via_pairs = abs(p * q + q * r + r * p)
    assert via_montesinos == via_alexander == via_pairs == 9, (via_montesinos, via_alexander, via_pairs)
    return "n=0 type {3,4,5}; determinant 9 by three routes"


def check_moser_endpoints():
    a = surgery.torus_knot_surgery(2, 3, 1)
    b = surgery.torus_knot_surgery(-2, 3, 1)
    assert a.payload == SFSType.of(2, 3, 5) and b.payload == SFSType.of(2, 3, 7), (a, b)
    for n in N_RANGE:
        for fam in verify.FAMILIES.values():
            t = _type_of_link(fam.link(n))
            assert sorted(t.indices) not in (sorted(a.payload.indices), sorted(b.payload.indices)), n
    return "T(2,3);1 = {2,3,5}, T(-2,3);1 = {2,3,7}, disjoint from both families"


def check_schubert_bound():
    bound = knotinv.satellite_genus_bound(2, 1)
    assert bound == 2 and bound > 1
    return "satellite_genus_bound(2, 1) = 2 > 1"


def check_primitivity_oracle():
    t0 = time.perf_counter()
    oracle = nielsen_primitive_words(6, 10)
    words = list(cyclically_reduced_words(6))
    mismatches = [w for w in words if heegaard.is_primitive(heegaard.FreeWord(w)) != (w in oracle)]
    elapsed = time.perf_counter() - t0
    assert not mismatches, mismatches[:5]
    assert elapsed < 10.0, elapsed
    return f"{len(words)} words agree with the Nielsen oracle in {elapsed:.2f}s ({heegaard.BACKEND} kernel)"


def check_unimodularity():
    m1, m2 = family_map(SITE_T1), family_map(SITE_T2)
    assert abs(m1.det) == 1 and abs(m2.det) == 1
    assert m1 == MobiusMap(11, 3, -15, -4) and m1.det == 1
    return f"family maps {m1.entries} det {m1.det}, {m2.entries} det {m2.det}"


def check_property_suites():
    rng = random.Random(20261015)
    for _ in range(10_000):
        r = slope(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        assert cf_fold(cf_expand(r)) == r, r
    for _ in range(1_000):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-30, 30) for _ in range(cols)] for _ in range(rows)]
        _, diag = smith_normal_form(m)
        nz = [d for d in diag if d]
        assert all(d > 0 for d in nz) and all(b % a == 0 for a, b in zip(nz, nz[1:])), m
        assert diag[len(nz):] == [0] * (len(diag) - len(nz)), m
    for _ in range(1_000):
        fibers = []
        for _ in range(3):
            a = rng.randint(2, 40)
            b = rng.choice([x for x in range(-a, a + 1) if x and Fraction(x, a).denominator == a])
            fibers.append((a, b))
        s = SeifertInvariants(rng.randint(-5, 5), tuple(fibers))
        order = abs(fibers[0][0] * fibers[1][0] * fibers[2][0] * seifert.euler_number(s).fraction)
        assert seifert.h1(s).order == order, s
    odd = [x for x in range(-15, 16) if x % 2]
    count = 0
    for p in odd:
        for q in odd:
            for r in odd:
                delta = knotinv.alexander(knotinv.seifert_matrix(knotinv.PretzelKnot(p, q, r)))
                assert delta.is_symmetric() and delta(1) == 1, (p, q, r)
                count += 1
    return f"10^4 cf round trips, 10^3 SNF chains, 10^3 |H1| checks, {count} pretzel Alexander polynomials"


def check_cli_contract():
    proc = subprocess.run(
        [sys.executable, "-m", "sfsurgery.cli", "sweep", "--family", "pretzel-335-t1",
         "--range", "-100..100", "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    data = json.loads(proc.stdout)
    jsonschema.validate(data, verify.REPORT_SCHEMA)
    assert json.loads(json.dumps(data)) == data and len(data) == 201
    return "verify sweep exits 0; 201 reports validate against the schema"


CHECKS = [
    (1, "t1 family sweep", check_t1_sweep),
    (2, "t2 family sweep", check_t2_sweep),
    (3, "two-route homology", check_two_route_homology),
    (4, "base points", check_base_points),
    (5, "Moser endpoints", check_moser_endpoints),
    (6, "Schubert bound", check_schubert_bound),
    (7, "primitivity oracle", check_primitivity_oracle),
    (8, "unimodularity", check_unimodularity),
    (9, "property suites", check_property_suites),
    (10, "CLI contract", check_cli_contract),
]


def _run(num, name, fn):
    try:
        detail = fn()
        ok = True
    except Exception as exc:
        detail, ok = f"{type(exc).__name__}: {exc}", False
    line = f"{'PASS' if ok else 'FAIL'} [{num:2d}] {name}: {detail}"
    RESULTS[num] = (ok, line)
    return ok, line


@pytest.mark.parametrize("num,name,fn", CHECKS, ids=[f"{n:02d}-{name.replace(' ', '-')}" for n, name, _ in CHECKS])
def test_acceptance(num, name, fn):
    ok, line = _run(num, name, fn)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(*c) for c in CHECKS]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
