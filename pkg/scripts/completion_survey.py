#!/usr/bin/env python3
"""Survey completion profiles across the first levels above each type's threshold.

For every admissible type (classical ranks capped by --max-rank) this prints
the completed group at the first --span levels with a nonempty alcove,
together with how many regular weights stayed unclassified (mixed
denominators).  A compact way to eyeball how sparse the profiles are.
"""

import argparse

from verlinde import all_types, build_root_system, completion_profile


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=4)
    parser.add_argument("--span", type=int, default=6, help="levels per type (default 6)")
    args = parser.parse_args()

    for lie_type in all_types(args.max_rank):
        rs = build_root_system(lie_type)
        h = rs.coxeter_number
        print(f"-- {lie_type} (threshold level {h})")
        for m in range(h, h + args.span):
            profile = completion_profile(rs, m)
            print(f"   m={m:3d}  {profile.rendered():24s} regular={profile.regular_total:4d} "
                  f"unclassified={profile.unclassified}")


if __name__ == "__main__":
    main()
