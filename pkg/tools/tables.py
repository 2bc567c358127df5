#!/usr/bin/env python3

"""Print the cumulant and moment tables of T and the Gumbel central moments."""

import sys

import coalescent_zeta.core.cli as cli


def main():
    sys.exit(cli.main(["tables"] + sys.argv[1:]))


if __name__ == "__main__":
    main()
