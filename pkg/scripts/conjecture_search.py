"""Search small linear systems on {0,1}^n for a single common k-divisible point.

Usage: python3 scripts/conjecture_search.py --n 4 --m 1 --k 3 --trials 5000
"""
import argparse
import json

from nullkit.numapps import ConjectureSearchConfig, afk_conjecture_search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--trials", type=int, default=5000)
    ap.add_argument("--coef-range", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args()
    cfg = ConjectureSearchConfig(a.n, a.m, a.k, a.trials, a.coef_range, a.seed)
    print(json.dumps(afk_conjecture_search(cfg).to_json()))


if __name__ == "__main__":
    main()
