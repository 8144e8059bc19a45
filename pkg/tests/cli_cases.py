"""One fixed invocation per subcommand, shared by the CLI tests."""
from __future__ import annotations

SUB = ["--type", "A1", "--weight", "0,-2,0"]

CASES = {
    "rootsys": ["rootsys", "G2"],
    "pairing": ["pairing", "--type", "A2", "--weight", "1,0,-3,0", "--other", "0,1,0,1"],
    "critical": ["critical", *SUB],
    "integral-roots": ["integral-roots", "--type", "A1", "--weight", "0,0,0"],
    "orbit": ["orbit", *SUB, "--ceiling", "-4,-2,2", "--depth", "6", "--root", "1"],
    "class": ["class", "--type", "A2", "--weight", "0,0,-3,0", "--mode", "classical",
              "--depth", "3"],
    "classify": ["classify", "--type", "A2", "--weight", "0,-1/2,-3,0"],
    "refine-check": ["refine-check", "--type", "A2", "--weight", "0,0,-3,0", "--depth", "3"],
    "qcoeff": ["qcoeff", "--rank", "1", "--n", "7"],
    "pcoeff": ["pcoeff", "--rank", "2", "--n", "6"],
    "char": ["char", "rverma", *SUB, "--depth", "4"],
    "blocks": ["blocks", *SUB, "--depth", "3"],
    "flag": ["flag", *SUB],
    "bggh": ["bggh", *SUB, "--depth", "6"],
    "simples": ["simples", *SUB, "--depth", "5"],
}
