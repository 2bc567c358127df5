#!/usr/bin/env python3

"""Run the exact, numeric and simulation verification suites."""

import sys

import coalescent_zeta.core.cli as cli


def main():
    sys.exit(cli.main(["verify"] + sys.argv[1:]))


if __name__ == "__main__":
    main()
