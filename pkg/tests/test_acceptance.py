"""Acceptance criteria 1-12, one test each.

Every test prints a single ``CRITERION <k>: PASS|FAIL`` line (collected in
the terminal summary by conftest) and then asserts.  Large simulations are
session fixtures shared between criteria.
"""

import io
import time

import numpy as np
import pytest
from scipy.stats import binomtest

from lpdec.automorphisms import AutomorphismSampler, verify_automorphism
from lpdec.channel import ChannelConfig, RngStream
from lpdec.cli import main
from lpdec.codes import builtin_code
from lpdec.decoders import (
    DecoderConfig,
    DecodeTrace,
    decode,
    decode_alp,
    decode_bb,
    decode_ml_bruteforce,
    decode_static_lp,
    preset_config,
)
from lpdec.harness import DECODER_STREAM, SimConfig, make_frame, paired_counts, run_simulation
from lpdec.lp import solve
from lpdec.separation import fs_count, prune_inactive

pytestmark = pytest.mark.acceptance

ACCEPTANCE_LINES = []

CERT_CODES = ("hamming_7_4", "hamming_8_4_paper", "bch_15_7")
CERT_SNRS = (2.0, 4.0)
CERT_FRAMES = 5000
SNAPSHOT_FRAMES = 40  # per (code, SNR): frames whose LP states are captured
PAIRED_FRAMES = 20000


def report(k, ok, detail):
    line = f"CRITERION {k:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def cert_decoders(code):
    out = [
        DecoderConfig(variant="alp"),
        DecoderConfig(variant="alp", prune_inactive=True, label="alp-prune"),
        DecoderConfig(variant="nsa"),
        DecoderConfig(variant="nsa", prune_inactive=True, label="nsa-prune"),
        DecoderConfig(variant="diversity", N=5),
        DecoderConfig(variant="alp_perm", N=5),
        DecoderConfig(variant="bb", depth=3),
        preset_config("A", code),
        preset_config("B", code),
        preset_config("C", code),
    ]
    if code.n <= 8:
        out.append(DecoderConfig(variant="static_lp"))
    return out


class CertRun:
    """Everything criteria 2, 4, 5 and 6 need from one pass over the frames."""

    def __init__(self):
        self.frames = {}  # (code, snr) -> frames decoded
        self.certified = {}  # (code, snr, decoder) -> certified outcomes
        self.violations = []
        self.snapshots = []  # (code name, problem, solution)
        self.pruned_runs = []  # iteration records of runs with pruning on
        self.cuts = {}  # code name -> {key: constraint}


@pytest.fixture(scope="session")
def cert_run():
    run = CertRun()
    for name in CERT_CODES:
        code = builtin_code(name)
        G = code.generator.astype(np.int64)
        ml_words = code.codewords
        decoders = cert_decoders(code)
        cuts = run.cuts.setdefault(name, {})
        for s, ebn0 in enumerate(CERT_SNRS):
            cfg = ChannelConfig(ebn0, code.rate)
            seed = 1000 + 10 * CERT_CODES.index(name) + s
            for t in range(CERT_FRAMES):
                _, r = make_frame(code, G, cfg, seed, t, "random_codeword")
                c = -r
                ml = decode_ml_bruteforce(code, c)
                for d in decoders:
                    trace = DecodeTrace(capture_states=(t < SNAPSHOT_FRAMES and d.variant == "nsa"))
                    rng = RngStream(seed, t).generator(DECODER_STREAM)
                    out = decode(d, code, c, r, rng, trace=trace)
                    key = (name, ebn0, d.name)
                    if out.ml_certificate:
                        run.certified[key] = run.certified.get(key, 0) + 1
                        if not np.array_equal(out.hard_word(), ml.word) or not out.integral:
                            run.violations.append((key, t))
                    if d.prune_inactive:
                        run.pruned_runs.extend((key, t, rec) for rec in trace.runs)
                    for con in trace.cuts:
                        cuts.setdefault(con.key, con)
                    run.snapshots.extend((name, p, sol) for p, sol in trace.snapshots)
            run.frames[(name, ebn0)] = CERT_FRAMES
        assert len(ml_words) == 2**code.k
    return run


@pytest.fixture(scope="session")
def paired_cfg():
    return SimConfig(
        code="bch_31_21",
        decoders=[
            DecoderConfig(variant="nsa", label="nsa"),
            preset_config("A", N=5),
            preset_config("B", depth=3),
            preset_config("C"),
        ],
        ebn0_list=[4.0],
        frames=PAIRED_FRAMES,
        seed=2024,
        max_frame_errors=None,
        record_frames=True,
    )


@pytest.fixture(scope="session")
def paired_run(paired_cfg):
    return run_simulation(paired_cfg)


@pytest.fixture(scope="session")
def bb_exhaustive_cfg():
    return SimConfig(
        code="hamming_8_4_paper",
        decoders=[DecoderConfig(variant="bb", depth=8, label="bb8"), DecoderConfig(variant="ml", label="ml")],
        ebn0_list=[3.0],
        frames=2000,
        seed=77,
        max_frame_errors=None,
        record_frames=True,
    )


# --- 1 ---


def test_criterion_01_worked_example():
    main(["paper-example"], io.StringIO(), io.StringIO())  # warm the JIT cache
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    code = main(["paper-example"], out, err)
    elapsed = time.perf_counter() - t0
    text = out.getvalue()
    nodes = int(text.split("root + ")[1].split()[0])
    code8 = builtin_code("hamming_8_4_paper")
    r = np.array([0.798337, 1.421758, -1.240177, -0.771128, -1.745193, 0.554868, 0.983861, -0.404989])
    bb = decode_bb(code8, -r, 3)
    ml = decode_ml_bruteforce(code8, -r)
    ok = code == 0 and np.array_equal(bb.word, ml.word) and bb.stats.bb_nodes <= 15 and nodes <= 15 and elapsed < 1.0
    report(1, ok, f"BB word {bb.word.astype(int).tolist()} == ML, bb_nodes={bb.stats.bb_nodes}, runtime {elapsed:.3f}s")


# --- 2 ---


def test_criterion_02_certificate_soundness(cert_run):
    total = sum(cert_run.certified.values())
    per_code = {name: min(cert_run.frames[(name, e)] for e in CERT_SNRS) for name in CERT_CODES}
    ok = not cert_run.violations and all(v >= 5000 for v in per_code.values())
    report(2, ok, f"{len(cert_run.violations)} violations among {total} certified outcomes; frames per point {per_code}")


# --- 3 ---


def test_criterion_03_alp_equals_static_lp():
    worst, max_iter_excess, frames = 0.0, -np.inf, 0
    most = {}
    for name in ("hamming_7_4", "hamming_8_4_paper"):
        code = builtin_code(name)
        G = code.generator.astype(np.int64)
        cfg = ChannelConfig(2.0, code.rate)
        for t in range(500):
            _, r = make_frame(code, G, cfg, 31, t, "random_codeword")
            a, s = decode_alp(code, -r), decode_static_lp(code, -r)
            worst = max(worst, abs(a.objective - s.objective))
            max_iter_excess = max(max_iter_excess, a.stats.iterations - code.n)
            most[name] = max(most.get(name, 0), a.stats.iterations)
            frames += 1
    ok = worst <= 1e-7 and max_iter_excess <= 0
    report(3, ok, f"{frames} frames, max |ALP - static| = {worst:.2e}, max ALP iterations {most} (n = 7, 8)")


# --- 4 ---


def test_criterion_04_pruning_keeps_objective(cert_run):
    worst, bad = 0.0, 0
    for _, problem, sol in cert_run.snapshots:
        p = problem.copy()
        prune_inactive(p, sol)
        diff = abs(solve(p).objective_value - sol.objective_value)
        worst = max(worst, diff)
        bad += diff > 1e-9
    ok = len(cert_run.snapshots) >= 200 and bad == 0
    report(4, ok, f"{len(cert_run.snapshots)} LP states, {bad} violations, max change {worst:.2e}")


# --- 5 ---


def test_criterion_05_strict_progress(cert_run):
    bad_obj = bad_repeat = steps = 0
    smallest = np.inf
    for _, _, records in cert_run.pruned_runs:
        for a, b in zip(records, records[1:]):
            steps += 1
            gain = b.objective - a.objective
            smallest = min(smallest, gain)
            bad_obj += not (a.cuts_added > 0 and gain >= 1e-9)
        xs = np.array([rec.x for rec in records])
        if len(xs) > 1:
            d = np.abs(xs[:, None, :] - xs[None, :, :]).max(axis=2)
            bad_repeat += int(np.sum(d[np.triu_indices(len(xs), 1)] <= 1e-7))
    ok = steps > 0 and bad_obj == 0 and bad_repeat == 0
    report(5, ok, f"{len(cert_run.pruned_runs)} pruned runs, {steps} cut steps, min increase {smallest:.3e}, "
                  f"{bad_obj} non-increasing, {bad_repeat} repeated iterates")


# --- 6 ---


def test_criterion_06_cut_validity(cert_run):
    total = bad = 0
    for name, cuts in cert_run.cuts.items():
        code = builtin_code(name)
        words = code.codewords.astype(np.float64)
        cons = list(cuts.values())
        A = np.zeros((len(cons), code.n))
        rhs = np.zeros(len(cons))
        for i, con in enumerate(cons):
            A[i, con._idx] = con._val
            rhs[i] = con.rhs
        lhs = words @ A.T
        bad += int(np.sum(np.any(lhs > rhs + 1e-12, axis=0)))
        total += len(cons)
    ok = total > 0 and bad == 0
    report(6, ok, f"{total} distinct cuts checked against all codewords, {bad} invalid")


# --- 7 ---


def test_criterion_07_automorphisms():
    details, ok = [], True
    for name, expect in (("bch_15_7", {"shift", "doubling"}), ("hamming_8_4_paper", None)):
        code = builtin_code(name)
        sampler = AutomorphismSampler.for_code(code)
        if expect is not None:
            ok &= set(sampler.generators) == expect
        rng = np.random.default_rng(7)
        good = sum(verify_automorphism(code, sampler.sample(rng)) for _ in range(1000))
        ok &= good == 1000
        details.append(f"{name}: {good}/1000")
    report(7, ok, ", ".join(details))


# --- 8 ---


def test_criterion_08_fs_count():
    out = io.StringIO()
    main(["inspect", "--code", "hamming_8_4_paper"], out, io.StringIO())
    ok = "fs_constraints: 152" in out.getvalue()
    details = ["[8,4,4] H: 152" if ok else "[8,4,4] H: wrong"]
    for name in ("hamming_7_4", "bch_15_7", "bch_31_21", "bch_63_39"):
        code = builtin_code(name)
        degrees = code.H.sum(axis=1)
        regular = len(set(degrees.tolist())) == 1
        buf = io.StringIO()
        main(["inspect", "--code", name], buf, io.StringIO())
        reported = int(buf.getvalue().split("fs_constraints: ")[1].split()[0])
        expected = 2 ** (int(degrees[0]) - 1) * code.m
        ok &= regular and reported == expected == fs_count(code.H)
        details.append(f"{name}: {reported} = 2^{int(degrees[0]) - 1}*{code.m}")
    report(8, ok, ", ".join(details))


# --- 9 ---


def _errors(stats, name):
    return [e for _, e, _, _ in stats.frame_log[(name, 4.0)]]


def test_criterion_09_directional_fer(paired_run):
    nsa = paired_run.get("nsa", 4.0)
    ok, details = nsa.frames >= 20000, []
    base = _errors(paired_run, "nsa")
    for name in ("A", "B"):
        p = paired_run.get(name, 4.0)
        only_nsa, only_other = paired_counts(base, _errors(paired_run, name))
        # exact one-sided sign test on discordant frames; H0: the preset is no better
        pval = binomtest(only_nsa, only_nsa + only_other, 0.5, alternative="greater").pvalue if only_nsa + only_other else 1.0
        ok &= p.fer <= nsa.fer and pval < 0.05
        details.append(f"FER {name}={p.fer:.5f} vs NSA={nsa.fer:.5f} (discordant {only_nsa}/{only_other}, p={pval:.2e})")
    report(9, ok, f"{nsa.frames} paired frames; " + "; ".join(details))


# --- 10 ---


def test_criterion_10_lp_solves(paired_run):
    c, nsa = paired_run.get("C", 4.0), paired_run.get("nsa", 4.0)
    ok = c.avg_lp_solves <= nsa.avg_lp_solves
    report(10, ok, f"mean LP solves C={c.avg_lp_solves:.4f} vs NSA={nsa.avg_lp_solves:.4f} over {c.frames} frames")


# --- 11 ---


def test_criterion_11_bb_exhaustive(bb_exhaustive_cfg):
    code = builtin_code("hamming_8_4_paper")
    G = code.generator.astype(np.int64)
    cfg = ChannelConfig(3.0, code.rate)
    mismatches = uncertified = 0
    for t in range(bb_exhaustive_cfg.frames):
        _, r = make_frame(code, G, cfg, bb_exhaustive_cfg.seed, t, "random_codeword")
        bb = decode_bb(code, -r, 8)
        ml = decode_ml_bruteforce(code, -r)
        mismatches += not np.array_equal(bb.word, ml.word)
        uncertified += not bb.ml_certificate
    stats = run_simulation(bb_exhaustive_cfg)
    same_errors = _log_errors(stats, "bb8", 3.0) == _log_errors(stats, "ml", 3.0)
    ok = mismatches == 0 and uncertified == 0 and same_errors
    report(11, ok, f"{bb_exhaustive_cfg.frames} frames: {mismatches} mismatches, {uncertified} uncertified, "
                   f"identical error sets {same_errors}")


def _log_errors(stats, name, ebn0):
    return [(f, e) for f, e, _, _ in stats.frame_log[(name, ebn0)]]


# --- 12 ---


def test_criterion_12_determinism(paired_cfg, paired_run, bb_exhaustive_cfg):
    details, ok = [], True
    # the criterion-9 simulation re-run with four workers
    again = run_simulation(_with(paired_cfg, workers=4))
    same = again.deterministic() == paired_run.deterministic() and again.frame_log == paired_run.frame_log
    ok &= same
    details.append(f"criterion 9 workers 1 vs 4: {'identical' if same else 'DIFFERENT'}")
    # a criterion-2 style configuration and the criterion-11 one at 1, 4 and 8 workers
    cert_cfg = SimConfig(
        code="bch_15_7",
        decoders=cert_decoders(builtin_code("bch_15_7")),
        ebn0_list=list(CERT_SNRS),
        frames=400,
        seed=5,
        max_frame_errors=50,
        chunk_size=25,
    )
    for label, cfg in (("criterion 2 (bch_15_7)", cert_cfg), ("criterion 11", bb_exhaustive_cfg)):
        runs = [run_simulation(_with(cfg, workers=w)) for w in (1, 4, 8)]
        same = all(r.deterministic() == runs[0].deterministic() for r in runs[1:])
        ok &= same
        details.append(f"{label} workers 1/4/8: {'identical' if same else 'DIFFERENT'}")
    report(12, ok, "; ".join(details))


def _with(cfg, **changes):
    from dataclasses import replace

    return replace(cfg, **changes)
