#!/usr/bin/env python3
# Example oracle backed by PARI/GP, speaking the line protocol on
# stdin/stdout. A sketch, not a turnkey tool: bnfinit of the degree-20
# closure needs a big stack and can run for minutes per radicand, and the
# unit-index computation is not attempted here (UINDEX answers ERR).
#
#   quintessa verify fixtures/table1.csv --oracle 'python3 tools/pari_oracle.example.py'

import subprocess
import sys

GP = ["gp", "-q", "-s", "4000000000"]
TIMEOUT = 3600  # per query, seconds


def gp_print(expr):
    # run one gp expression that prints its answer on the last line
    out = subprocess.run(GP, input=expr + "\nquit\n", capture_output=True,
                         text=True, timeout=TIMEOUT)
    if out.returncode != 0:
        raise RuntimeError("gp exited %d" % out.returncode)
    lines = [l.strip() for l in out.stdout.splitlines() if l.strip()]
    if not lines:
        raise RuntimeError("gp printed nothing")
    return lines[-1]


def classgroup5(n):
    # elementary divisors of the 5-part of Cl(Q(n^(1/5), zeta5))
    expr = (
        "pol = polredbest(polcompositum(x^5 - %d, polcyclo(5))[1]);"
        "bnf = bnfinit(pol, 1);"
        "part = select(d -> d %% 5 == 0, bnf.clgp.cyc);"
        "print(if(#part == 0, \"1\","
        "  strjoin(vector(#part, i, Str(5^valuation(part[i], 5))), \" \")))"
    ) % n
    return gp_print(expr)


def hgamma(n):
    return gp_print("print(bnfinit(x^5 - %d, 1).no)" % n)


def handle(line):
    words = line.split()
    if len(words) != 2 or not words[1].isdigit():
        return "ERR bad request"
    verb, n = words[0], int(words[1])
    if n < 2:
        return "ERR bad radicand"
    try:
        if verb == "CLASSGROUP5":
            return "OK " + classgroup5(n)
        if verb == "HGAMMA":
            return "OK " + hgamma(n)
        if verb == "UINDEX":
            return "ERR UINDEX not implemented in this example"
        return "ERR unknown request"
    except Exception as e:  # gp failure, timeout
        return "ERR " + str(e).replace("\n", " ")


def main():
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        print(handle(line), flush=True)


if __name__ == "__main__":
    try:
        main()
    except BrokenPipeError:
        sys.exit(1)
