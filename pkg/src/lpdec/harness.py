"""Monte Carlo frame-error-rate simulation with paired decoder comparison.

Every decoder sees the same received vector for frame ``t``; the frame is a
pure function of ``(seed, t)`` so results do not depend on how frames are
spread over worker processes.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Sequence

import numpy as np

from .channel import ChannelConfig, RngStream, modulate, transmit
from .codes import LinearCode, load_code
from .decoders import DecoderConfig, decode, preset_config
from .errors import ConfigError, UnknownCode, UnknownPreset

CSV_COLUMNS = (
    "decoder",
    "ebn0_db",
    "frames",
    "frame_errors",
    "fer",
    "ml_cert_rate",
    "avg_lp_solves",
    "avg_cuts_fs",
    "avg_cuts_rpc",
    "avg_bb_nodes",
    "avg_wall_time_ms",
)

TRANSMIT_MODES = ("zero_word", "random_codeword")

# substreams of a frame's RngStream
NOISE_STREAM = 0
WORD_STREAM = 1
DECODER_STREAM = 2


@dataclass
class SimConfig:
    code: str
    decoders: list
    ebn0_list: list
    frames: int
    seed: int = 0
    max_frame_errors: int | None = 100
    transmit_mode: str = "random_codeword"
    workers: int = 1
    chunk_size: int = 50
    record_frames: bool = False

    def __post_init__(self):
        if self.frames < 1:
            raise ConfigError("frames must be >= 1")
        if not self.ebn0_list:
            raise ConfigError("ebn0_list must not be empty")
        if self.transmit_mode not in TRANSMIT_MODES:
            raise ConfigError(f"transmit_mode must be one of {TRANSMIT_MODES}")
        if self.workers < 1 or self.chunk_size < 1:
            raise ConfigError("workers and chunk_size must be >= 1")
        if not self.decoders:
            raise ConfigError("at least one decoder is required")
        self.decoders = [d if isinstance(d, DecoderConfig) else decoder_from_json(d) for d in self.decoders]
        names = [d.name for d in self.decoders]
        if len(set(names)) != len(names):
            raise ConfigError(f"decoder labels must be unique: {names}")
        self.ebn0_list = [float(e) for e in self.ebn0_list]


def decoder_from_json(spec) -> DecoderConfig:
    """Decoder entry of a config: ``"A"``, ``"nsa"`` or a dict of fields.

    A dict may carry ``"preset"`` to start from A/B/C and override fields.
    """
    try:
        if isinstance(spec, str):
            if spec in ("A", "B", "C"):
                return preset_config(spec)
            return DecoderConfig(variant=spec)
        if isinstance(spec, dict):
            spec = dict(spec)
            preset = spec.pop("preset", None)
            known = {f.name for f in fields(DecoderConfig)}
            unknown = set(spec) - known
            if unknown:
                raise ConfigError(f"unknown decoder fields {sorted(unknown)}")
            if preset is not None:
                return preset_config(preset, **spec)
            return DecoderConfig(**spec)
    except (UnknownPreset, TypeError) as exc:
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"cannot read decoder entry {spec!r}")


def load_config(path) -> SimConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    allowed = {f.name for f in fields(SimConfig)}
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys {sorted(unknown)}")
    try:
        return SimConfig(**data)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc


@dataclass
class PointStats:
    decoder: str
    ebn0_db: float
    frames: int = 0
    frame_errors: int = 0
    fer: float = 0.0
    ml_cert_rate: float = 0.0
    avg_lp_solves: float = 0.0
    avg_cuts_fs: float = 0.0
    avg_cuts_rpc: float = 0.0
    avg_bb_nodes: float = 0.0
    avg_wall_time_ms: float = 0.0

    def row(self) -> dict:
        return asdict(self)

    def deterministic(self) -> tuple:
        d = asdict(self)
        d.pop("avg_wall_time_ms")
        return tuple(d.values())


@dataclass
class SimStats:
    points: dict = field(default_factory=dict)  # (decoder, ebn0) -> PointStats
    # with record_frames: (decoder, ebn0) -> list of (frame, error, certified, received_hash)
    frame_log: dict = field(default_factory=dict)

    def get(self, decoder: str, ebn0: float) -> PointStats:
        return self.points[(decoder, float(ebn0))]

    def ordered(self) -> list[PointStats]:
        return [self.points[k] for k in sorted(self.points, key=lambda k: (k[0], k[1]))]

    def deterministic(self) -> tuple:
        """Everything except wall-clock averages."""
        return tuple(p.deterministic() for p in self.ordered())


def make_frame(code: LinearCode, generator: np.ndarray, cfg: ChannelConfig, seed: int, t: int, mode: str):
    """Transmitted word and received vector of frame ``t``."""
    stream = RngStream(seed, t)
    if mode == "zero_word":
        x = np.zeros(code.n, dtype=np.uint8)
    else:
        u = stream.generator(WORD_STREAM).integers(0, 2, size=generator.shape[0])
        x = ((u @ generator) % 2).astype(np.uint8)
    r = transmit(modulate(x), cfg, stream)
    return x, r


def received_hash(r: np.ndarray) -> str:
    return hashlib.sha1(np.ascontiguousarray(r, dtype=np.float64).tobytes()).hexdigest()[:16]


def _run_chunk(args):
    code, decoders, ebn0, seed, mode, start, stop, active = args
    cfg = ChannelConfig(ebn0, code.rate)
    G = code.generator.astype(np.int64)
    out = []
    for t in range(start, stop):
        x, r = make_frame(code, G, cfg, seed, t, mode)
        per = {}
        for d in active:
            rng = RngStream(seed, t).generator(DECODER_STREAM)
            r_in = r.copy()
            o = decode(decoders[d], code, -r_in, r_in, rng)
            ok = o.integral and np.array_equal(o.hard_word(), x)
            s = o.stats
            per[d] = (
                not ok,
                bool(o.ml_certificate),
                s.lp_solves,
                s.cuts_fs,
                s.cuts_rpc,
                s.bb_nodes,
                s.wall_time,
                received_hash(r_in),
            )
        out.append((t, per))
    return out


def run_simulation(cfg: SimConfig, code: LinearCode | None = None) -> SimStats:
    """Run every decoder on the same frames at every Eb/N0 point.

    A decoder stops at a point once it has ``max_frame_errors`` errors;
    frames after that are not counted for it.
    """
    if code is None:
        try:
            code = load_code(cfg.code)
        except UnknownCode as exc:
            raise ConfigError(f"unknown code {cfg.code!r}") from exc
    decoders = list(cfg.decoders)
    names = [d.name for d in decoders]
    stats = SimStats()
    cap = cfg.max_frame_errors if cfg.max_frame_errors else math.inf
    executor = ProcessPoolExecutor(cfg.workers) if cfg.workers > 1 else None
    try:
        for ebn0 in cfg.ebn0_list:
            acc = {d: np.zeros(7) for d in range(len(decoders))}  # frames, errors, cert, lp, fs, rpc, bb
            wall = {d: 0.0 for d in range(len(decoders))}
            logs = {d: [] for d in range(len(decoders))}
            active = list(range(len(decoders)))
            t = 0
            while t < cfg.frames and active:
                batch = cfg.chunk_size * cfg.workers
                stop = min(cfg.frames, t + batch)
                tasks = []
                for s in range(t, stop, cfg.chunk_size):
                    tasks.append((code, decoders, ebn0, cfg.seed, cfg.transmit_mode, s, min(stop, s + cfg.chunk_size), tuple(active)))
                results = executor.map(_run_chunk, tasks) if executor else map(_run_chunk, tasks)
                for chunk in results:
                    for frame, per in chunk:
                        for d, rec in per.items():
                            if d not in active or acc[d][1] >= cap:
                                continue
                            err, cert, lp, fs, rpc, bb, wt, h = rec
                            acc[d] += (1, err, cert, lp, fs, rpc, bb)
                            wall[d] += wt
                            if cfg.record_frames:
                                logs[d].append((frame, bool(err), cert, h))
                active = [d for d in active if acc[d][1] < cap]
                t = stop
            for d, name in enumerate(names):
                a = acc[d]
                f = int(a[0])
                p = PointStats(
                    decoder=name,
                    ebn0_db=ebn0,
                    frames=f,
                    frame_errors=int(a[1]),
                    fer=float(a[1] / f) if f else 0.0,
                    ml_cert_rate=float(a[2] / f) if f else 0.0,
                    avg_lp_solves=float(a[3] / f) if f else 0.0,
                    avg_cuts_fs=float(a[4] / f) if f else 0.0,
                    avg_cuts_rpc=float(a[5] / f) if f else 0.0,
                    avg_bb_nodes=float(a[6] / f) if f else 0.0,
                    avg_wall_time_ms=1000.0 * wall[d] / f if f else 0.0,
                )
                stats.points[(name, ebn0)] = p
                if cfg.record_frames:
                    stats.frame_log[(name, ebn0)] = logs[d]
    finally:
        if executor is not None:
            executor.shutdown()
    return stats


def stats_to_csv(stats: SimStats) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for p in stats.ordered():
        row = p.row()
        w.writerow([row[c] if isinstance(row[c], str) else repr(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def stats_to_json(stats: SimStats) -> str:
    return json.dumps([p.row() for p in stats.ordered()], indent=2) + "\n"


def emit_results(stats: SimStats, path, format: str = "csv") -> None:
    if format not in ("csv", "json"):
        raise ConfigError(f"unknown output format {format!r}")
    text = stats_to_csv(stats) if format == "csv" else stats_to_json(stats)
    with open(path, "w") as fh:
        fh.write(text)


def read_results(path) -> SimStats:
    """Parse a CSV or JSON result file written by :func:`emit_results`."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("["):
        rows = json.loads(text)
    else:
        rows = list(csv.DictReader(io.StringIO(text)))
    stats = SimStats()
    for row in rows:
        p = PointStats(
            decoder=row["decoder"],
            ebn0_db=float(row["ebn0_db"]),
            frames=int(row["frames"]),
            frame_errors=int(row["frame_errors"]),
            **{c: float(row[c]) for c in CSV_COLUMNS[4:]},
        )
        stats.points[(p.decoder, p.ebn0_db)] = p
    return stats


def paired_counts(errors_a: Sequence[bool], errors_b: Sequence[bool]) -> tuple[int, int]:
    """(frames where only A failed, frames where only B failed)."""
    a = np.asarray(errors_a, dtype=bool)
    b = np.asarray(errors_b, dtype=bool)
    if a.shape != b.shape:
        raise ValueError("paired error sequences differ in length")
    return int(np.sum(a & ~b)), int(np.sum(b & ~a))
