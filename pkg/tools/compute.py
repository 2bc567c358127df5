#!/usr/bin/env python3

"""Compute one quantity (see coalescent_zeta/core/builders.py for the names)."""

import sys

import coalescent_zeta.core.cli as cli


def main():
    sys.exit(cli.main(["compute"] + sys.argv[1:]))


if __name__ == "__main__":
    main()
