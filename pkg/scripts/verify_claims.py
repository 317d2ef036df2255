"""Run every reproducible claim and write the results as JSON and a text log."""

import argparse
import dataclasses
import json
import pathlib
import sys
import time

from altknot.cli import claim_checks


@dataclasses.dataclass(frozen=True)
class Config:
    max_n: int = 6
    max_q: int = 21
    out_dir: pathlib.Path = pathlib.Path("results")


def main(cfg: Config) -> int:
    start = time.perf_counter()
    results = claim_checks(cfg.max_n, cfg.max_q)
    elapsed = time.perf_counter() - start
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    payload = {"config": {"max_n": cfg.max_n, "max_q": cfg.max_q},
               "checks": [{"claim": k, "pass": ok, "detail": d} for k, ok, d in results]}
    (cfg.out_dir / "verify_claims.json").write_text(json.dumps(payload, indent=2) + "\n")
    failed = [k for k, ok, _ in results if not ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed in {elapsed:.2f}s")
    for key in failed:
        print(f"FAIL {key}")
    return 1 if failed else 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=Config.max_n)
    parser.add_argument("--max-q", type=int, default=Config.max_q)
    parser.add_argument("--out-dir", type=pathlib.Path, default=Config.out_dir)
    args = parser.parse_args()
    sys.exit(main(Config(args.max_n, args.max_q, args.out_dir)))
