"""Acceptance criteria, one test per criterion, exact arithmetic throughout.

Each test prints one PASS/FAIL ledger line (visible with pytest -s or on
failure).  Sample sizes and time targets are pinned here:

  1. degree bound on >= 20 seeded Lagrangians, equality somewhere,
     < 60 s per instance and < 15 min total;
  2. Taylor vanishing orders for k = 0..3 and the plane case;
  3. rk f2 = 4 - level for levels 1, 2, 3;
  4. Schur determinant identity for k in {1, 2}, and rank 3 for the k=2
     double-cover quadratic part;
  5. four randomized quadratic-form suites, >= 200 instances each;
  6. the lattice ledger;
  7. the Hilbert-square ledger, < 60 s;
  8. byte-stable report and JSON round trips.
"""

import time

from epw import checks
from epw.cli import run as cli_run


def _ledger(name, ok, detail=""):
    line = "%s acceptance:%s %s" % ("PASS" if ok else "FAIL", name, detail)
    print(line)
    assert ok, line


def test_criterion_1_degree_bound():
    import random
    from epw.local_model import Chart, local_sextic
    from epw.wedge import random_graph_lagrangian, standard_chart_basis, _unit

    rng = random.Random(1)
    t_total = time.time()
    degrees = []
    worst = 0.0
    for i in range(20):
        frame, _ = random_graph_lagrangian(rng, corank=rng.choice([0, 0, 0, 1]))
        chart = Chart(frame, _unit(0), standard_chart_basis()[1])
        t0 = time.time()
        ls = local_sextic(frame, chart)
        worst = max(worst, time.time() - t0)
        degrees.append(ls.degree())
    total = time.time() - t_total
    ok = (all(d <= 6 for d in degrees) and any(d == 6 for d in degrees)
          and worst < 60.0 and total < 900.0)
    _ledger("epw-degree-bound", ok,
            "instances=20 max-degree=%d equality=%d worst=%.1fs total=%.1fs"
            % (max(degrees), sum(1 for d in degrees if d == 6), worst, total))


def test_criterion_2_taylor_orders():
    r = checks.check_taylor_orders(seed=1)
    _ledger("taylor-orders", r.ok, r.detail)


def test_criterion_3_rank_formula():
    r = checks.check_rank_formula(seed=1)
    _ledger("rank-f2", r.ok, r.detail)


def test_criterion_4_schur_and_double_cover():
    r1 = checks.check_schur_identity(seed=1, ks=(1, 2))
    r2 = checks.check_double_cover_rank()
    _ledger("schur-identity-and-cover", r1.ok and r2.ok,
            "%s | %s" % (r1.detail, r2.detail))


def test_criterion_5_quadratic_form_suites():
    rs = [
        checks.check_corank_duality(1, cases=200),
        checks.check_degenerate_cone(2, cases=200),
        checks.check_vanishing_kernel(3, cases=200),
        checks.check_phi2_rank(4, cases=200),
    ]
    _ledger("quadratic-form-suites", all(r.ok for r in rs),
            " ".join("%s:%s" % (r.name, r.ok) for r in rs))


def test_criterion_6_lattice_ledger():
    rs = checks.check_lattice_ledger(seed=5, root_samples=60)
    _ledger("lattice-ledger", all(r.ok for r in rs),
            " ".join("%s:%s" % (r.name, r.ok) for r in rs))


def test_criterion_7_hilbert_ledger():
    t0 = time.time()
    rs = checks.check_hilbert_ledger(seed=6, pell_bound=10, fujiki_cases=100)
    elapsed = time.time() - t0
    ok = all(r.ok for r in rs) and elapsed < 60.0
    _ledger("hilbert-ledger", ok,
            "%.1fs " % elapsed + " ".join("%s:%s" % (r.name, r.ok) for r in rs))


def test_criterion_8_determinism_and_io():
    code1, out1 = cli_run(["report", "--seed", "1"])
    code2, out2 = cli_run(["report", "--seed", "1"])
    io_ok = checks.check_io_roundtrip().ok
    ok = code1 == 0 and code2 == 0 and out1 == out2 and io_ok
    _ledger("determinism-and-io", ok,
            "report-bytes-equal=%s roundtrip=%s" % (out1 == out2, io_ok))
