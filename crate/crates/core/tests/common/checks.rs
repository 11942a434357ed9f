//! Checks shared by the acceptance runner and the ordinary test targets.
//! Each returns a one-line summary on success and a description of the
//! first discrepancy on failure.

use std::collections::{BTreeSet, VecDeque};
use std::time::{Duration, Instant};

use bsemi_core::census::{associative_tables, run_census, semigroup_classes};
use bsemi_core::completion::group_completion_with_stats;
use bsemi_core::fixtures;
use bsemi_core::linalg::{kernel_basis, smith_diagonal, solve_in_lattice};
use bsemi_core::nerve::{bar_boundary, nerve_fits, DEFAULT_CELL_CAP};
use bsemi_core::resolution::{boundary_as_int_matrix, build_root};
use bsemi_core::table::{
    cyclic_group, join, left_zero_band, rectangular_band, rees_matrix,
};
use bsemi_core::{
    abelianization, get_homology, group_completion, min_ideal, nerve_homology, FinAbGroup,
    IntMatrix, ResolutionCaps, SemigroupTable,
};
use dashu_int::{IBig, UBig};
use proptest::test_runner::TestCaseError;
use rand::{Rng, SeedableRng};

use super::oracle;
use super::strategies::relabeled;

pub type Check = Result<String, String>;

pub fn show(groups: &[FinAbGroup]) -> Vec<String> {
    groups.iter().map(ToString::to_string).collect()
}

fn homology(s: &SemigroupTable, m: usize) -> Result<Vec<FinAbGroup>, String> {
    get_homology(s, m).map_err(|e| e.to_string())
}

fn expect_homology(name: &str, s: &SemigroupTable, expected: &[&str], limit: Duration) -> Check {
    let start = Instant::now();
    let got = show(&homology(s, expected.len())?);
    let took = start.elapsed();
    if got != expected {
        return Err(format!("{name}: got [{}], expected [{}]", got.join(", "), expected.join(", ")));
    }
    if took > limit {
        return Err(format!("{name}: took {took:?}, limit {limit:?}"));
    }
    Ok(format!("{name} in {took:.2?}"))
}

const MINUTE: Duration = Duration::from_secs(60);

pub fn contractible_without_zero() -> Check {
    let s = fixtures::contractible_without_zero();
    let summary = expect_homology("contractible", &s, &["0"; 4], MINUTE)?;
    let g = group_completion(&s).map_err(|e| e.to_string())?;
    if g.len() != 1 {
        return Err(format!("contractible: group completion has order {}", g.len()));
    }
    let has_zero = (0..s.order()).any(|z| {
        (0..s.order()).all(|x| s.mul(x, z) == z) || (0..s.order()).all(|x| s.mul(z, x) == z)
    });
    if has_zero {
        return Err("contractible: table has a one-sided zero".into());
    }
    Ok(summary)
}

pub fn three_sphere() -> Check {
    expect_homology("three-sphere", &fixtures::three_sphere(), &["0", "0", "Z", "0"], MINUTE)
}

pub fn sphere_tower() -> Check {
    expect_homology("sphere-tower", &fixtures::sphere_tower(), &["0", "Z", "Z", "Z", "Z", "Z"], MINUTE)
}

pub fn rectangular_bands() -> Check {
    for a in 1..=4 {
        for b in 1..=4 {
            let h2 = match (a - 1) * (b - 1) {
                0 => "0".to_string(),
                1 => "Z".to_string(),
                r => format!("Z^{r}"),
            };
            expect_homology(&format!("rect {a}x{b}"), &rectangular_band(a, b), &["0", &h2, "0"], MINUTE)?;
        }
    }
    Ok("rectangular bands up to 4 x 4".into())
}

pub fn moore_c2_3() -> Check {
    expect_homology("moore-c2-3", &fixtures::moore_c2_3(), &["0", "0", "C_2", "0", "0"], MINUTE)
}

pub fn moore_c2_2() -> Check {
    expect_homology("moore-c2-2", &fixtures::moore_c2_2(), &["0", "C_2", "0", "0"], MINUTE)
}

pub fn large_torsion() -> Check {
    expect_homology(
        "large-torsion",
        &fixtures::large_torsion(),
        &["0", "Z", "Z^3", "Z^6", "Z^9", "Z^9 x C_1494640", "Z^27 x C_17"],
        MINUTE,
    )
}

pub fn doubling_ranks() -> Check {
    let s = fixtures::doubling_ranks();
    let h = homology(&s, 12)?;
    if !h[0].is_trivial() {
        return Err(format!("doubling-ranks: H_1 = {}", h[0]));
    }
    for i in 2..=12 {
        let expected = FinAbGroup::free(UBig::ONE << (i - 2));
        if h[i - 1] != expected {
            return Err(format!("doubling-ranks: H_{i} = {}", h[i - 1]));
        }
    }
    let start = Instant::now();
    let top = homology(&s, 10_000)?.pop().unwrap();
    let took = start.elapsed();
    if top != FinAbGroup::free(UBig::ONE << 9998) {
        return Err("doubling-ranks: H_10000 is not free of rank 2^9998".into());
    }
    if took > Duration::from_secs(10) {
        return Err(format!("doubling-ranks: H_10000 took {took:?}"));
    }
    Ok(format!("doubling-ranks to H_12, H_10000 in {took:.2?}"))
}

pub fn example_tables() -> Check {
    let parts = [
        contractible_without_zero()?,
        three_sphere()?,
        sphere_tower()?,
        rectangular_bands()?,
        moore_c2_3()?,
        moore_c2_2()?,
        large_torsion()?,
        doubling_ranks()?,
    ];
    Ok(parts.join("; "))
}

fn census_line(order: usize, extended: bool, expected: (usize, usize, &[usize])) -> Check {
    let start = Instant::now();
    let r = run_census(order, extended).map_err(|e| e.to_string())?;
    let took = start.elapsed();
    let counts: Vec<usize> = r.signatures.iter().map(|s| s.count).collect();
    let (classes, non_thin, sigs) = expected;
    if r.classes != classes || r.non_k_thin != non_thin || counts != sigs {
        return Err(format!(
            "order {order}: {} classes, {} non-K-thin, signature counts {counts:?}",
            r.classes, r.non_k_thin
        ));
    }
    let limit = if extended { Duration::from_secs(7200) } else { MINUTE };
    if took > limit {
        return Err(format!("order {order}: took {took:?}"));
    }
    Ok(format!("order {order}: {classes} classes {counts:?} in {took:.2?}"))
}

pub fn census() -> Check {
    let mut parts = vec![
        census_line(1, false, (1, 0, &[1]))?,
        census_line(2, false, (4, 0, &[3, 1]))?,
        census_line(3, false, (18, 0, &[14, 3, 1]))?,
        census_line(4, true, (126, 1, &[102, 18, 3, 1, 1, 1]))?,
    ];
    let named: [(usize, bool, &[([&str; 6], usize)]); 2] = [
        (
            3,
            false,
            &[
                (["0", "0", "0", "0", "0", "0"], 14),
                (["C_2", "0", "C_2", "0", "C_2", "0"], 3),
                (["C_3", "0", "C_3", "0", "C_3", "0"], 1),
            ],
        ),
        (
            4,
            true,
            &[
                (["0", "0", "0", "0", "0", "0"], 102),
                (["C_2", "0", "C_2", "0", "C_2", "0"], 18),
                (["C_3", "0", "C_3", "0", "C_3", "0"], 3),
                (["0", "Z", "0", "0", "0", "0"], 1),
                (["C_2^2", "C_2", "C_2^3", "C_2^2", "C_2^4", "C_2^3"], 1),
                (["C_4", "0", "C_4", "0", "C_4", "0"], 1),
            ],
        ),
    ];
    for (order, extended, rows) in named {
        let r = run_census(order, extended).map_err(|e| e.to_string())?;
        for (sig, count) in rows {
            if r.count_of(sig) != *count {
                return Err(format!("order {order}: signature {sig:?} count {}", r.count_of(sig)));
            }
        }
    }
    parts.push("every signature matched by name".into());
    Ok(parts.join("; "))
}

/// Resolution against the nerve in dimensions 1..3.
pub fn agree_with_nerve(s: &SemigroupTable) -> Result<(), String> {
    let a = homology(s, 3)?;
    let b = nerve_homology(s, 3).map_err(|e| e.to_string())?;
    if a != b {
        return Err(format!(
            "resolution [{}] vs nerve [{}] on\n{}",
            show(&a).join(", "),
            show(&b).join(", "),
            s.to_text()
        ));
    }
    Ok(())
}

pub fn oracle_equivalence() -> Check {
    let mut checked = 0;
    for n in 1..=3 {
        for s in associative_tables(n) {
            agree_with_nerve(&s)?;
            checked += 1;
        }
    }
    let mut small: Vec<SemigroupTable> = fixtures::all()
        .into_iter()
        .map(|(_, s)| s)
        .filter(|s| s.order() <= 5)
        .collect();
    for a in 1..=5 {
        for b in 1..=5 / a {
            small.push(rectangular_band(a, b));
        }
    }
    small.extend((1..=5).map(cyclic_group));
    for s in &small {
        agree_with_nerve(s)?;
    }
    Ok(format!(
        "{checked} tables of order <= 3 and {} tables of order <= 5",
        small.len()
    ))
}

pub fn h1_matches_abelianized_completion(s: &SemigroupTable) -> Result<(), String> {
    let h1 = homology(s, 1)?.pop().unwrap();
    let oracle = oracle::abelianized_group_image(s);
    let g = group_completion(s).map_err(|e| e.to_string())?;
    let library = abelianization(s, &g);
    if h1 != oracle || library != oracle {
        return Err(format!(
            "H_1 = {h1}, abelianization = {library}, oracle = {oracle} on\n{}",
            s.to_text()
        ));
    }
    Ok(())
}

pub fn h1_exhaustive() -> Check {
    let mut count = 0;
    for n in 1..=3 {
        for s in associative_tables(n) {
            h1_matches_abelianized_completion(&s)?;
            count += 1;
        }
    }
    Ok(format!("H_1 on {count} tables"))
}

fn reduced(groups: &[FinAbGroup]) -> Vec<FinAbGroup> {
    // reduced H_0 is trivial for a nonempty space
    let mut v = vec![FinAbGroup::trivial()];
    v.extend_from_slice(groups);
    v
}

pub fn suspension_law() -> Check {
    for (name, s) in [
        ("C_2", cyclic_group(2)),
        ("C_3", cyclic_group(3)),
        ("Rect_2^2", rectangular_band(2, 2).adjoin_unit()),
    ] {
        let suspended = join(&s, 2).map_err(|e| e.to_string())?;
        let top = homology(&suspended, 5)?;
        let base = reduced(&homology(&s, 4)?);
        if top != base {
            return Err(format!(
                "{name}: join with two points [{}], expected [{}]",
                show(&top).join(", "),
                show(&base).join(", ")
            ));
        }
    }
    Ok("C_2, C_3, Rect_2^2 to dimension 5".into())
}

pub fn cone_law() -> Check {
    let mut monoids: Vec<SemigroupTable> = (1..=3)
        .flat_map(|n| semigroup_classes(n).unwrap())
        .map(|s| if s.is_monoid() { s } else { s.adjoin_unit() })
        .collect();
    monoids.push(rectangular_band(2, 2).adjoin_unit());
    monoids.push(fixtures::three_sphere().adjoin_unit());
    for s in &monoids {
        let cone = join(s, 1).map_err(|e| e.to_string())?;
        let h = homology(&cone, 4)?;
        if h.iter().any(|g| !g.is_trivial()) {
            return Err(format!("join with a point: [{}] on\n{}", show(&h).join(", "), s.to_text()));
        }
    }
    Ok(format!("{} monoids to dimension 4", monoids.len()))
}

fn ibig_matrix(m: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(m)
}

pub fn snf_minor_gcd(m: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let d = smith_diagonal(&ibig_matrix(m));
    let k_max = m.len().min(m[0].len());
    let mut product = IBig::ONE;
    for k in 1..=k_max {
        let expected = IBig::from(oracle::minor_gcd(m, k));
        if k <= d.len() {
            if d[k - 1] <= IBig::ZERO {
                return Err(TestCaseError::fail(format!("nonpositive factor {}", d[k - 1])));
            }
            if k > 1 && (&d[k - 1] % &d[k - 2]) != IBig::ZERO {
                return Err(TestCaseError::fail("factors not in divisibility order"));
            }
            product *= &d[k - 1];
        } else {
            product = IBig::ZERO;
        }
        if product != expected {
            return Err(TestCaseError::fail(format!(
                "d_1..d_{k} = {product}, gcd of minors = {expected}"
            )));
        }
    }
    Ok(())
}

/// The kernel basis is annihilated, has full kernel rank, and spans a
/// saturated lattice: some maximal minor set has gcd 1.
pub fn kernel_saturated(m: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let a = ibig_matrix(m);
    let k = kernel_basis(&a);
    if !(a.checked_mul(&k).unwrap()).is_zero() {
        return Err(TestCaseError::fail("basis vector not in the kernel"));
    }
    let cols = m[0].len();
    let rank_a = (1..=m.len().min(cols))
        .take_while(|&r| oracle::minor_gcd(m, r) != 0)
        .count();
    if k.cols() != cols - rank_a {
        return Err(TestCaseError::fail(format!("kernel rank {} vs {}", k.cols(), cols - rank_a)));
    }
    if k.cols() == 0 {
        return Ok(());
    }
    let small: Vec<Vec<i64>> = k
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|x| i64::try_from(x.clone()).unwrap()).collect())
        .collect();
    if oracle::minor_gcd(&small, k.cols()) != 1 {
        return Err(TestCaseError::fail("kernel lattice is not saturated"));
    }
    Ok(())
}

/// Every boundary of the nerve and of the resolution composes to zero, and
/// each resolution step is exact.
pub fn chain_laws(s: &SemigroupTable) -> Result<(), String> {
    for i in 1..=3 {
        if !nerve_fits(s.order(), i, DEFAULT_CELL_CAP) {
            break;
        }
        let a = bar_boundary(s, i).map_err(|e| e.to_string())?;
        let b = bar_boundary(s, i + 1).map_err(|e| e.to_string())?;
        if !a.checked_mul(&b).unwrap().is_zero() {
            return Err(format!("nerve boundary {i} after {} is nonzero", i + 1));
        }
    }
    resolution_exact(s, 3)
}

fn embed_block(
    rows: usize,
    domain_blocks: &[std::ops::Range<usize>],
    child: &IntMatrix,
) -> IntMatrix {
    let mut out = IntMatrix::zeros(rows, child.cols());
    let mut r = 0;
    for block in domain_blocks {
        for target in block.clone() {
            for c in 0..child.cols() {
                out.set(target, c, child.get(r, c).clone());
            }
            r += 1;
        }
    }
    out
}

fn spans_kernel(boundary: &IntMatrix, image: &IntMatrix) -> Result<(), String> {
    if !boundary.checked_mul(image).unwrap().is_zero() {
        return Err("consecutive boundaries compose to a nonzero map".into());
    }
    let kernel = kernel_basis(boundary);
    if kernel.cols() == 0 {
        return Ok(());
    }
    if image.cols() == 0 {
        return Err(format!("kernel of rank {} has no cover", kernel.cols()));
    }
    solve_in_lattice(image, &kernel)
        .map(|_| ())
        .map_err(|_| "image does not reach the whole kernel".into())
}

/// Exactness of the resolution of `s` (or of `s` with a unit adjoined) at
/// every node within `depth` steps of the root, including at the augmentation.
pub fn resolution_exact(s: &SemigroupTable, depth: usize) -> Result<(), String> {
    let monoid = if s.is_monoid() { s.clone() } else { s.adjoin_unit() };
    let (mut res, root) = build_root(&monoid, ResolutionCaps::default()).map_err(|e| e.to_string())?;
    {
        let root_node = res.node(root).boundary();
        let d1 = boundary_as_int_matrix(res.context(), root_node);
        let ones = IntMatrix::from_rows(&[vec![1i64; d1.rows()]]);
        spans_kernel(&ones, &d1).map_err(|e| format!("at the augmentation: {e}"))?;
    }
    let mut seen = BTreeSet::from([root]);
    let mut queue = VecDeque::from([(root, 0)]);
    while let Some((id, d)) = queue.pop_front() {
        if d >= depth {
            continue;
        }
        res.make_children(id).map_err(|e| e.to_string())?;
        let node = res.node(id);
        let ctx = res.context();
        let a = boundary_as_int_matrix(ctx, node.boundary());
        let domain = node.boundary().domain();
        let mut columns = Vec::new();
        let children = node.children().unwrap().to_vec();
        for child in &children {
            let b = boundary_as_int_matrix(ctx, res.node(child.node).boundary());
            let blocks: Vec<_> = child.summands.iter().map(|&j| domain.block(j)).collect();
            columns.extend(embed_block(a.cols(), &blocks, &b).columns());
        }
        let image = IntMatrix::from_columns(a.cols(), &columns);
        spans_kernel(&a, &image).map_err(|e| format!("node {id}: {e}"))?;
        for child in children {
            if seen.insert(child.node) {
                queue.push_back((child.node, d + 1));
            }
        }
    }
    Ok(())
}

pub fn unit_and_opposite_invariance(s: &SemigroupTable) -> Result<(), String> {
    let h = homology(s, 3)?;
    let unit = homology(&s.adjoin_unit(), 3)?;
    let opposite = homology(&s.opposite(), 3)?;
    if h != unit || h != opposite {
        return Err(format!(
            "S [{}], with unit [{}], opposite [{}] on\n{}",
            show(&h).join(", "),
            show(&unit).join(", "),
            show(&opposite).join(", "),
            s.to_text()
        ));
    }
    Ok(())
}

pub fn k_thin_matches_group(s: &SemigroupTable) -> Result<(), String> {
    let rees = min_ideal(s).map_err(|e| e.to_string())?;
    if !rees.is_k_thin() {
        return Err(format!("generator produced a non-K-thin table\n{}", s.to_text()));
    }
    let group = s.restrict(rees.h_set()).ok_or("maximal subgroup is not closed")?;
    let h = homology(s, 3)?;
    let expected = nerve_homology(&group, 3).map_err(|e| e.to_string())?;
    if h != expected {
        return Err(format!(
            "S [{}], group [{}] on\n{}",
            show(&h).join(", "),
            show(&expected).join(", "),
            s.to_text()
        ));
    }
    Ok(())
}

/// Lookup counts of the group completion on products of a left zero band
/// with a cyclic group, and on Rees matrix semigroups over cyclic groups,
/// relabeled at random.
fn synthesized(n: usize, rng: &mut rand::rngs::StdRng) -> Vec<SemigroupTable> {
    let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let a = divisors[rng.gen_range(1..divisors.len() - 1)];
    let k = n / a;
    let product = left_zero_band(a).direct_product(&cyclic_group(k));
    let (rows, cols) = (2, 2);
    let g = n / (rows * cols);
    let sandwich: Vec<Vec<usize>> = (0..cols)
        .map(|_| (0..rows).map(|_| rng.gen_range(0..g)).collect())
        .collect();
    let rees = rees_matrix(&cyclic_group(g), rows, cols, &sandwich).unwrap();
    let band = rectangular_band(8, n / 8);
    [product, rees, band]
        .iter()
        .map(|s| relabeled(s, rng.gen()))
        .collect()
}

pub fn lookup_counts(n: usize, seed: u64) -> Result<Vec<u64>, String> {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    synthesized(n, &mut rng)
        .iter()
        .map(|s| group_completion_with_stats(s).map(|(_, l)| l).map_err(|e| e.to_string()))
        .collect()
}

pub fn lookup_growth() -> Check {
    let (small, large) = (64usize, 4096usize);
    let a = lookup_counts(small, 7)?;
    let b = lookup_counts(large, 7)?;
    let nlogn = |n: usize| n as f64 * (n as f64).log2();
    let mut lines = Vec::new();
    for (family, (&x, &y)) in ["product", "rees", "band"].iter().zip(a.iter().zip(&b)) {
        let exponent = (y as f64 / x as f64).ln() / (large as f64 / small as f64).ln();
        let drift = (y as f64 / nlogn(large)) / (x as f64 / nlogn(small));
        if exponent >= 2.0 || drift > 2.0 {
            return Err(format!(
                "{family}: {x} -> {y} lookups, exponent {exponent:.3}, n log n ratio drift {drift:.2}"
            ));
        }
        lines.push(format!("{family} exponent {exponent:.3}"));
    }
    Ok(lines.join(", "))
}
