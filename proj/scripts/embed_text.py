#!/usr/bin/env python3
"""Embed a text file into a C++ header as a raw string literal."""
import sys


def main() -> int:
    if len(sys.argv) != 4:
        print("usage: embed_text.py <input> <output> <identifier>", file=sys.stderr)
        return 2
    src, dst, ident = sys.argv[1:4]
    with open(src, "r", encoding="utf-8", newline="") as f:
        text = f.read()
    delim = "EMBED"
    while f'){delim}"' in text:
        delim += "_"
    with open(dst, "w", encoding="utf-8", newline="") as f:
        f.write("// Generated from %s. Do not edit.\n" % src.replace("\\", "/").split("/")[-1])
        f.write("#pragma once\n")
        f.write("#include <string_view>\n\n")
        f.write(f'inline constexpr std::string_view {ident} = R"{delim}({text}){delim}";\n')
    return 0


if __name__ == "__main__":
    sys.exit(main())
