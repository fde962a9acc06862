#!/usr/bin/env python

import sys
import argparse

# A simple script to test the installed version of sepsim by calling
# 'sepsim.test()'. Sets the exit status, useful for automated test
# environments.

# In case we are run from the source directory, we don't want to import
# sepsim from there, we want to import the installed version:
sys.path.pop(0)

import sepsim  # noqa: E402

parser = argparse.ArgumentParser(
    usage="%(prog)s [options] -- [pytest options]")
parser.add_argument("-v", "--verbose", action="count", default=0,
                    help="increase verbosity")
parser.add_argument("-m", "--mode", default="fast",
                    help="'fast' skips the slow Monte Carlo runs, 'full' "
                         "runs everything [default: %(default)s]")
options, args = parser.parse_known_args()
if args and args[0] == '--':
    args = args[1:]

if options.mode == 'fast':
    args = ['-m', 'not slow'] + args
elif options.mode != 'full':
    parser.error("`--mode` must be 'fast' or 'full'")
if options.verbose:
    args = ['-' + 'v' * options.verbose] + args

sys.exit(sepsim.test(*args))
