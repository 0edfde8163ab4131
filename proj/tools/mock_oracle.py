#!/usr/bin/env python3
"""Stand-in for a computer-algebra oracle, for protocol tests only.

Speaks the line protocol (CLASSGROUP5/HGAMMA/UINDEX -> OK/ERR) with canned
answers for a few radicands. It does no mathematics. Behavior switches for
failure-path tests:

  MOCK_ORACLE_MODE = ok (default) | err | garbage | slow | eof
  MOCK_ORACLE_COUNT_FILE = path; appends one line per request seen
"""

import os
import sys
import time

MODE = os.environ.get("MOCK_ORACLE_MODE", "ok")
COUNT_FILE = os.environ.get("MOCK_ORACLE_COUNT_FILE")

# divisors of the 5-part, h_gamma, unit index for the worked examples
CANNED = {
    "95": ("5 5", "5", "125"),
    "57": ("5 5", "5", "125"),
    "149": ("5 5", "10", "375"),
}


def answer(line):
    parts = line.split()
    if len(parts) != 2:
        return "ERR bad request"
    kind, n = parts
    row = CANNED.get(n)
    if kind == "CLASSGROUP5":
        if n == "2":
            return "OK"  # trivial 5-part: empty divisor list
        return "OK " + row[0] if row else "ERR no data for " + n
    if kind == "HGAMMA":
        return "OK " + row[1] if row else "ERR no data for " + n
    if kind == "UINDEX":
        return "OK " + row[2] if row else "ERR no data for " + n
    return "ERR unknown request " + kind


def main():
    if MODE == "eof":
        return
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        if COUNT_FILE:
            with open(COUNT_FILE, "a") as f:
                f.write(line + "\n")
        if MODE == "err":
            print("ERR mock refuses", flush=True)
        elif MODE == "garbage":
            print("WHAT 42", flush=True)
        elif MODE == "slow":
            time.sleep(2)
            print(answer(line), flush=True)
        else:
            print(answer(line), flush=True)


if __name__ == "__main__":
    try:
        main()
    except BrokenPipeError:
        # the client gave up on us (timeout test); vanish quietly
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        sys.exit(1)
