"""CLI invocations whose JSON output is frozen under tests/golden/."""
from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "golden"

CASES = {
    "classify_endo_swap": ["classify", "endo", "--n", "2", "--q", "1,1", "--A", "0,1;1,0"],
    "classify_derivation": ["classify", "derivation", "--n", "1", "--coeffs", "x1"],
    "classify_endo_neither": ["classify", "endo", "--n", "1", "--q", "1", "--A", "2"],
    "classify_endo_rank_one": ["classify", "endo", "--n", "2", "--q", "2,-1", "--A", "0,0;1,1"],
    "image_member_constant": ["image", "member", "--endo", "--n", "1", "--q", "3", "--A", "1", "--f", "1"],
    "image_member_witness": ["image", "member", "--endo", "--n", "1", "--q", "3", "--A", "1", "--f", "x1 + x1^-1"],
    "image_member_general": ["image", "member", "--n", "2", "--q", "-1,2", "--A", "1,0;0,1", "--f", "x1^2*x2 - x1"],
    "image_member_derivation": ["image", "member", "--derivation", "--n", "2", "--coeffs", "x1,-x2", "--f", "x1*x2 + x1"],
    "image_describe_general": ["image", "describe", "--endo", "--n", "2", "--q", "-1,2", "--A", "1,0;0,1"],
    "image_describe_rotation": ["image", "describe", "--n", "2", "--q", "1,-1", "--A", "0,-1;1,0"],
    "mstest_constant_free": ["ms-test", "--V", "constant-free", "--n", "1", "--f", "x1", "--probes", "x1^-5", "--M", "8", "--Mprime", "12"],
    "mstest_image_fails_scan": ["ms-test", "--V", "image", "--n", "1", "--q", "3", "--A", "1", "--f", "x1 + x1^-1", "--probes", "1"],
    "mstest_no_probes": ["ms-test", "--V", "constant-free", "--n", "2", "--f", "x1*x2"],
    "polytope_inside": ["polytope", "--n", "2", "--f", "x1^2 + x2^2 + 3*x1^-1*x2^-1"],
    "polytope_outside": ["polytope", "--n", "2", "--f", "x1 + x2"],
    "orbit_overflow": ["orbit", "--n", "2", "--q", "1,1", "--A", "1,1;0,1", "--alpha", "0,1", "--cap", "5"],
    "orbit_swap": ["orbit", "--n", "2", "--q", "1,1", "--A", "0,1;1,0", "--alpha", "1,0"],
    "snf": ["snf", "--A", "2,4;1,3"],
}
