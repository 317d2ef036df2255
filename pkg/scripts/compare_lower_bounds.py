"""Compare the |tau + upsilon| and signature-based lower bounds over torus knots."""

import argparse
import csv
import dataclasses
import sys

from altknot.bounds import abe_bound, alt_exact, tau_upsilon_bound, torus_corpus


@dataclasses.dataclass(frozen=True)
class Config:
    p_values: tuple[int, ...] = (3, 4, 5, 6)
    max_q: int = 25


def rows(cfg: Config):
    for k in torus_corpus(cfg.p_values, cfg.max_q):
        tu, abe = tau_upsilon_bound(k), abe_bound(k)
        exact = alt_exact(k)
        yield {"p": k.p, "q": k.q, "g": k.genus, "tau_upsilon": tu, "abe": str(abe),
               "delta": str(tu - abe), "exact": "" if exact is None else exact}


def main(cfg: Config) -> None:
    out = list(rows(cfg))
    writer = csv.DictWriter(sys.stdout, fieldnames=list(out[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(out)
    wins = sum(1 for r in out if r["tau_upsilon"] > float(r["abe"]))
    print(f"# |tau+upsilon| strictly better on {wins} of {len(out)} knots", file=sys.stderr)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=lambda s: tuple(int(x) for x in s.split(",")),
                        default=Config.p_values)
    parser.add_argument("--max-q", type=int, default=Config.max_q)
    args = parser.parse_args()
    main(Config(args.p, args.max_q))
