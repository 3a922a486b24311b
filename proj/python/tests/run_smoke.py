"""Smoke tests for the _coarsedim extension (run under ctest)."""

import subprocess
import os
import sys

import _coarsedim as cd


def check(cond, label):
    if not cond:
        raise AssertionError(label)
    print(f"ok: {label}")


def main():
    check(cd.lattice_count(2, 1) == 5, "lattice count (2,1) = 5")
    check(cd.ehrhart_corrected(2, 1) == 5, "corrected Ehrhart agrees")
    check(cd.ehrhart_paper_formula(2, 1) == 3, "printed formula diverges at (2,1)")
    for k in range(1, 5):
        for r in range(0, 7):
            check(
                cd.ehrhart_corrected(k, r) == cd.lattice_count(k, r),
                f"corrected == oracle at ({k},{r})",
            )

    check(cd.word_ball_sizes("z", 3) == [1, 2, 2, 2], "Z sphere sizes")
    check(cd.parry_mismatches("z2wrz", 6) == 0, "lamplighter parry exact to radius 6")
    check(cd.parry_mismatches("zwrz", 5) == 0, "Z wr Z parry exact to radius 5")
    check(cd.parry_length("zwrz", "[3:2;0]") == 8, "lamp 2 at 3 costs 8")

    check(cd.min_colors("zpath:21", "3", "0") == 4, "zpath:21 needs 4 colors")
    check(cd.min_colors("cube:3", "1", "0") == 2, "checker bound on the 3-cube")
    check(cd.hex1_min_colors(1, 10, "2") == 2, "1-d board value")

    check(cd.cube_expansion_verdict(4, 0) == "pass", "cube expansion n=4 r=0")
    check(cd.expansion_color_bound("1/2", 20) == "58", "expansion color bound")

    check(cd.x0_cells() == 4, "x0 has 4 cells")
    check(cd.x1_cells() == 6, "x1 has 6 cells")
    check(cd.commuting_family_cells(2) == [8, 8, 8, 8], "level-2 family cells")
    check(cd.xi_cells(1, [1, 0]) == 6, "xi(e1) cells")
    check(cd.burillo_violations(4) == 0, "metric comparison clean")
    check(cd.diagram_distance("()|()", "(()(()()))|((()())())") == 4, "distance to x0")

    bk = cd.bk_lower_bound(1, "55")
    check(bk["r"] == 5 and bk["bound"] == 11, "lower-bound calculator")

    line = cd.ko_line_report(2, 1)
    check(line["valid"] and line["min_colors_per_point"] == 2, "line coloring")
    broken = cd.ko_line_report(1, 0, literal=True)
    check(not broken["valid"], "literal residue rule fails at m=0")
    grid = cd.ko_grid_valid(2, 1, 72)
    check(grid["valid"] and grid["colors_used"] == 3, "grid coloring")
    kob = cd.ko_bk_bound(1, 10, 0)
    check(kob["colors"] == "80", "KO recursion at k=1")

    cli = os.environ.get("COARSEDIM_CLI")
    if cli:
        out = subprocess.run([cli, "ehrhart", "--k", "2", "--r", "1"],
                             capture_output=True, text=True)
        check(out.returncode == 0 and "mismatch-paper-formula" in out.stdout,
              "cli ehrhart run")

    print("smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
