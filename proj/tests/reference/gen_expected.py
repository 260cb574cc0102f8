"""Collects every reference value and emits tests/expected_values.hpp.

Run from tests/reference:  python3 gen_expected.py > ../expected_values.hpp
The emitted header is committed; tests compare library output against it.
"""

from fractions import Fraction

import calc_core
import calc_border
import calc_lp
import calc_verify
import calc_engine
import calc_learners


def cpp_frac(f):
    f = Fraction(f)
    assert abs(f.numerator) < 2**62 and f.denominator < 2**62, f
    return f"{{{f.numerator}, {f.denominator}}}"


def emit(name, val, lines):
    if isinstance(val, bool):
        lines.append(f"inline constexpr bool k{name} = {str(val).lower()};")
    elif isinstance(val, int):
        lines.append(f"inline constexpr long long k{name} = {val};")
    elif isinstance(val, Fraction):
        lines.append(f"inline constexpr Frac k{name} = {cpp_frac(val)};")
    elif isinstance(val, list) and all(isinstance(v, bool) for v in val):
        body = ", ".join(str(v).lower() for v in val)
        lines.append(
            f"inline constexpr bool k{name}[{len(val)}] = {{{body}}};")
    elif isinstance(val, list):
        body = ", ".join(cpp_frac(v) for v in val)
        lines.append(
            f"inline constexpr Frac k{name}[{len(val)}] = {{{body}}};")
    else:
        raise TypeError(f"{name}: {type(val)}")


def main():
    lines = [
        "// generated by tests/reference/gen_expected.py -- do not edit",
        "#pragma once",
        "",
        "namespace expected {",
        "",
        "struct Frac {",
        "  long long num;",
        "  long long den;",
        "};",
        "",
    ]
    for module in (calc_core, calc_border, calc_lp, calc_verify,
                   calc_engine, calc_learners):
        lines.append(f"// from {module.__name__}")
        for name, val in module.values():
            emit(name, val, lines)
        lines.append("")
    lines.append("}  // namespace expected")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
