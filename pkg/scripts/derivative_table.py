"""Print d, its preimage description and the condensation trace for a range of ordinals.

    python3 scripts/derivative_table.py --max-degree 2 --max-coeff 2
"""

import argparse

from fincond.derivative import d, i_preimage
from fincond.enumeration import ordinals
from fincond.oracle import condense_cnf_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=2)
    ap.add_argument("--max-coeff", type=int, default=2)
    ap.add_argument("--trace", action="store_true", help="show the oracle's rewrite steps")
    args = ap.parse_args()

    print(f"{'alpha':<22} {'d(alpha)':<18} preimage of alpha")
    for alpha in ordinals(args.max_degree, args.max_coeff):
        trace = [] if args.trace else None
        value = condense_cnf_oracle(alpha, trace)
        assert value == d(alpha), alpha
        print(f"{str(alpha):<22} {str(value):<18} {i_preimage(alpha)}")
        for step in trace or ():
            print(f"    {step}")


if __name__ == "__main__":
    main()
