# %% Frame error rate of several decoders on identical noise
import json
import sys
from pathlib import Path

from lpdec.harness import load_config, paired_counts, run_simulation, stats_to_csv

here = Path(__file__).parent
cfg = load_config(here / "sim_config.json")
if len(sys.argv) > 1:
    cfg.frames = int(sys.argv[1])
cfg.record_frames = True
print("code:", cfg.code, "decoders:", [d.name for d in cfg.decoders], "frames per point:", cfg.frames)

stats = run_simulation(cfg)
print(stats_to_csv(stats))

# %% Paired comparison: frames where only one of two decoders failed
for ebn0 in cfg.ebn0_list:
    base = [e for _, e, _, _ in stats.frame_log[("nsa", ebn0)]]
    for name in ("A", "B", "C"):
        other = [e for _, e, _, _ in stats.frame_log[(name, ebn0)]]
        m = min(len(base), len(other))
        only_nsa, only_other = paired_counts(base[:m], other[:m])
        print(f"{ebn0:g} dB  nsa-only errors {only_nsa:3d}   {name}-only errors {only_other:3d}")
