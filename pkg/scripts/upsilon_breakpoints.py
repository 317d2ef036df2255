"""Dump exact Upsilon breakpoints for a range of torus knots as JSON (plot-ready)."""

import argparse
import dataclasses
import json

from altknot.bounds import torus_corpus
from altknot.upsilon import upsilon_torus


@dataclasses.dataclass(frozen=True)
class Config:
    p_values: tuple[int, ...] = (3, 4)
    max_q: int = 13


def main(cfg: Config) -> None:
    data = {str(k): upsilon_torus(k).to_json() for k in torus_corpus(cfg.p_values, cfg.max_q)}
    print(json.dumps(data, indent=2))


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=lambda s: tuple(int(x) for x in s.split(",")),
                        default=Config.p_values)
    parser.add_argument("--max-q", type=int, default=Config.max_q)
    args = parser.parse_args()
    main(Config(args.p, args.max_q))
