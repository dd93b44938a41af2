//! Exact checks behind the non-existence results for `ℤ{X,Y}`.
//!
//! * `lemma-trace`: with `R = [[0,0],[1,0]]` and `S = [[0,1],[0,0]]` over
//!   `F_p`, `Tr(R^p S^p - (RS)^p) = -1`. Trace vanishes on commutators, so
//!   `X^pY^p` and `(XY)^p` differ modulo `[A,A] + pA`.
//! * `lemma-necklace`: the same fact read off the necklace basis.
//! * `thm-1-1`, `thm-1-2`: the ghost image of `⟨X⟩⟨Y⟩` (under `γ̄`, resp.
//!   `η̄`) violates the congruence `w_k ≡ w_{k-1}^p (mod [A,A] + pA)` that
//!   every Witt ghost image satisfies, at coordinate 1.
//!
//! Every verdict comes from exact arithmetic; nothing is sampled.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{eval_matrix, CoefficientRing, FreePoly, GeneratorSet, Matrix, MatrixAssignment, Word};
use crate::cuntz_deninger::{eta_bar, realize, ESymbol, TeichWitness};
use crate::error::{Error, Result};
use crate::ghost::GhostVector;
use crate::necklace::{frobenius_p, NecklacePoly};
use crate::prime::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Check {
    #[serde(rename = "lemma-trace")]
    LemmaTrace,
    #[serde(rename = "lemma-necklace")]
    LemmaNecklace,
    #[serde(rename = "thm-1-1")]
    Thm11,
    #[serde(rename = "thm-1-2")]
    Thm12,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::LemmaTrace, Check::LemmaNecklace, Check::Thm11, Check::Thm12];

    pub fn name(self) -> &'static str {
        match self {
            Check::LemmaTrace => "lemma-trace",
            Check::LemmaNecklace => "lemma-necklace",
            Check::Thm11 => "thm-1-1",
            Check::Thm12 => "thm-1-2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// One coordinate of the mod-p ghost congruence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub index: usize,
    /// What a Witt ghost image would have to carry here, mod `[A,A] + pA`.
    pub required: NecklacePoly,
    /// What the element actually carries, mod `[A,A] + pA`.
    pub actual: NecklacePoly,
    pub satisfied: bool,
}

/// How the required value at coordinate `k` is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CongruenceMode {
    /// `w_k ≡ F(w_{k-1})`.
    Consecutive,
    /// `w_k ≡ F^k(w_0)`: the shape `(ᾱ, ᾱ^p, ᾱ^{p^2}, …)` with `ᾱ = w_0`.
    FromFirst,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Trace {
        r: Vec<Vec<String>>,
        s: Vec<Vec<String>>,
        r_pow_p_is_zero: bool,
        s_pow_p_is_zero: bool,
        trace: String,
        expected: String,
    },
    Necklace {
        difference: NecklacePoly,
        word_length: usize,
        trace_of_difference: String,
        trace_of_necklaces: String,
    },
    Ghost {
        element: String,
        ghost: GhostVector,
        congruences: Vec<Congruence>,
        control_element: String,
        control_violations: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub prime: Prime,
    pub check: Check,
    pub verdict: Verdict,
    pub statement: String,
    pub witness: Witness,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Equality of everything except the timing.
    pub fn same_result(&self, other: &VerificationReport) -> bool {
        self.prime == other.prime
            && self.check == other.check
            && self.verdict == other.verdict
            && self.statement == other.statement
            && self.witness == other.witness
    }
}

fn xy_integers() -> (GeneratorSet, CoefficientRing) {
    (GeneratorSet::xy(), CoefficientRing::Integers)
}

fn xy_word(x_run: usize, y_run: usize, repeats: usize) -> Word {
    let mut letters = vec![0u8; x_run];
    letters.extend(std::iter::repeat_n(1u8, y_run));
    Word::from_letters(letters).repeat(repeats)
}

/// `(XY)^p - X^pY^p` over ℤ.
fn power_difference(p: Prime) -> FreePoly {
    let (gens, ring) = xy_integers();
    let n = p.get() as usize;
    FreePoly::from_terms(
        &gens,
        &ring,
        [(xy_word(1, 1, n), BigInt::from(1)), (xy_word(n, n, 1), BigInt::from(-1))],
    )
}

/// `X ↦ [[0,0],[1,0]]`, `Y ↦ [[0,1],[0,0]]` over `F_p`.
pub fn lemma_matrices(p: Prime) -> MatrixAssignment {
    let ring = CoefficientRing::modular(p.get()).expect("p >= 2");
    let r = Matrix::from_rows(&ring, [[0, 0], [1, 0]]).expect("2x2");
    let s = Matrix::from_rows(&ring, [[0, 1], [0, 0]]).expect("2x2");
    MatrixAssignment::new(&ring, [("X", r), ("Y", s)]).expect("same ring and size")
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn timed<F>(p: Prime, check: Check, body: F) -> Result<VerificationReport>
where
    F: FnOnce() -> Result<(bool, String, Witness)>,
{
    let start = Instant::now();
    let (ok, statement, witness) = body()?;
    Ok(VerificationReport {
        prime: p,
        check,
        verdict: Verdict::from_bool(ok),
        statement,
        witness,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn counterexample_trace(p: u64) -> Result<VerificationReport> {
    let p = Prime::new(p)?;
    timed(p, Check::LemmaTrace, || {
        let asg = lemma_matrices(p);
        let ring = asg.ring().clone();
        let r = asg.get("X").expect("X assigned");
        let s = asg.get("Y").expect("Y assigned");
        let zero = Matrix::zero(2, &ring);
        // X^pY^p - (XY)^p
        let f = power_difference(p).scale(&BigInt::from(-1));
        let trace = eval_matrix(&f, &asg)?.trace();
        let expected = ring.normalize(BigInt::from(-1));
        let ok = trace == expected;
        let statement = format!(
            "Tr(R^{p} S^{p} - (RS)^{p}) = {trace} (expected -1 = {expected}) in F_{p} for \
             R = [[0,0],[1,0]], S = [[0,1],[0,0]]; trace kills commutators, so \
             X^{p}Y^{p} and (XY)^{p} differ modulo [A,A] + {p}A"
        );
        let witness = Witness::Trace {
            r: matrix_strings(r),
            s: matrix_strings(s),
            r_pow_p_is_zero: r.pow(p.get()) == zero,
            s_pow_p_is_zero: s.pow(p.get()) == zero,
            trace: trace.to_string(),
            expected: expected.to_string(),
        };
        Ok((ok, statement, witness))
    })
}

pub fn counterexample_necklace(p: u64) -> Result<VerificationReport> {
    let p = Prime::new(p)?;
    timed(p, Check::LemmaNecklace, || {
        let diff = power_difference(p).reduce_mod(p.get())?;
        let classes = NecklacePoly::project(&diff);
        let asg = lemma_matrices(p);
        // The trace functional is defined on classes; both readings must agree.
        let trace_diff = eval_matrix(&diff, &asg)?.trace();
        let trace_classes = eval_matrix(&classes.embed(), &asg)?.trace();
        let ok = !classes.is_zero() && trace_diff == trace_classes && trace_diff == BigInt::from(1);
        let statement = format!(
            "(XY)^{p} - X^{p}Y^{p} projects to {} necklace term(s) over F_{p}: {}; \
             its matrix trace is {trace_diff}, the negative of Tr(R^{p}S^{p} - (RS)^{p})",
            classes.num_terms(),
            classes
        );
        let witness = Witness::Necklace {
            difference: classes,
            word_length: 2 * p.get() as usize,
            trace_of_difference: trace_diff.to_string(),
            trace_of_necklaces: trace_classes.to_string(),
        };
        Ok((ok, statement, witness))
    })
}

/// The mod-p congruences `w_k ≡ required_k` for `k = 1..n`, which hold for
/// the ghost image of every Witt vector.
pub fn ghost_congruences(ghost: &GhostVector, mode: CongruenceMode) -> Result<Vec<Congruence>> {
    let p = ghost.prime();
    let reduced = ghost.reduce_mod(p.get())?;
    let coords = reduced.coords();
    let mut out = Vec::new();
    let mut iterated = coords.first().cloned();
    for k in 1..coords.len() {
        let required = match mode {
            CongruenceMode::Consecutive => frobenius_p(&coords[k - 1], p)?,
            CongruenceMode::FromFirst => {
                let next = frobenius_p(iterated.as_ref().expect("k >= 1"), p)?;
                iterated = Some(next.clone());
                next
            }
        };
        let actual = coords[k].clone();
        out.push(Congruence { index: k, satisfied: required == actual, required, actual });
    }
    Ok(out)
}

fn require_truncation(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TruncationTooSmall { min: 2, got: n })
    } else {
        Ok(())
    }
}

fn violated_at_one(congruences: &[Congruence]) -> bool {
    congruences.first().is_some_and(|c| c.index == 1 && !c.satisfied)
}

/// `γ̄(⟨X⟩⟨Y⟩)` and, as the control, `γ̄(⟨XY⟩)`.
pub fn gamma_of_teichmuller_products(p: Prime, n: usize) -> Result<(GhostVector, GhostVector)> {
    let (gens, ring) = xy_integers();
    let x = FreePoly::generator(&gens, &ring, "X")?;
    let y = FreePoly::generator(&gens, &ring, "Y")?;
    let xy = &x * &y;
    let split = TeichWitness::new(0, vec![x, y])?;
    let joint = TeichWitness::teichmuller(xy);
    Ok((
        GhostVector::project(p, &realize(&split, n, p))?,
        GhostVector::project(p, &realize(&joint, n, p))?,
    ))
}

/// `η̄(⟨[X]⟩⟨[Y]⟩)` and, as the control, `η̄(⟨[XY]⟩)`.
pub fn eta_of_teichmuller_products(p: Prime, n: usize) -> Result<(GhostVector, GhostVector)> {
    let (gens, ring) = xy_integers();
    let x = FreePoly::generator(&gens, &ring, "X")?;
    let y = FreePoly::generator(&gens, &ring, "Y")?;
    let split = ESymbol::teichmuller(&x, n, p).mul(&ESymbol::teichmuller(&y, n, p))?;
    let joint = ESymbol::teichmuller(&(&x * &y), n, p);
    Ok((eta_bar(&split)?, eta_bar(&joint)?))
}

fn obstruction(
    p: Prime,
    check: Check,
    n: usize,
    mode: CongruenceMode,
    ghosts: impl FnOnce() -> Result<(GhostVector, GhostVector)>,
    map_name: &str,
    elements: (&str, &str),
) -> Result<VerificationReport> {
    require_truncation(n)?;
    timed(p, check, || {
        let (ghost, control) = ghosts()?;
        let congruences = ghost_congruences(&ghost, mode)?;
        let control_violations =
            ghost_congruences(&control, mode)?.iter().filter(|c| !c.satisfied).count();
        let ok = violated_at_one(&congruences);
        let first = &congruences[0];
        let statement = format!(
            "{map_name}({}) at p = {p}, n = {n}: a Witt ghost image must satisfy \
             w_1 = {} mod [A,A] + {p}A, but w_1 = {}; no Witt vector has this ghost image, \
             so no map compatible with the ghost maps can reach it (continuity and \
             surjectivity hypotheses carry no finite content and are not checked); \
             control {map_name}({}) shows {control_violations} violation(s)",
            elements.0, first.required, first.actual, elements.1
        );
        let witness = Witness::Ghost {
            element: elements.0.to_owned(),
            ghost,
            congruences,
            control_element: elements.1.to_owned(),
            control_violations,
        };
        Ok((ok, statement, witness))
    })
}

pub fn obstruction_theorem_1_1(p: u64, n: usize) -> Result<VerificationReport> {
    let p = Prime::new(p)?;
    obstruction(
        p,
        Check::Thm11,
        n,
        CongruenceMode::Consecutive,
        || gamma_of_teichmuller_products(p, n),
        "gamma",
        ("<X><Y>", "<X*Y>"),
    )
}

pub fn obstruction_theorem_1_2(p: u64, n: usize) -> Result<VerificationReport> {
    let p = Prime::new(p)?;
    obstruction(
        p,
        Check::Thm12,
        n,
        CongruenceMode::FromFirst,
        || eta_of_teichmuller_products(p, n),
        "eta",
        ("<[X]><[Y]>", "<[X*Y]>"),
    )
}

/// Runs one named check. `n` is ignored by the lemma checks.
pub fn run_check(check: Check, p: u64, n: usize) -> Result<VerificationReport> {
    match check {
        Check::LemmaTrace => counterexample_trace(p),
        Check::LemmaNecklace => counterexample_necklace(p),
        Check::Thm11 => obstruction_theorem_1_1(p, n),
        Check::Thm12 => obstruction_theorem_1_2(p, n),
    }
}
