//! Huang data `(q; a, b, c, d)`, its validity conditions, and every scalar
//! derived from it.

use std::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{inv_nonzero, pow_nonzero, Field, FieldError, PrimeField, Scalar};

/// One element of the triple `A, B, C`, with the cyclic order A -> B -> C -> A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Member {
    A,
    B,
    C,
}

impl Member {
    pub const ALL: [Member; 3] = [Member::A, Member::B, Member::C];

    pub fn next(self) -> Member {
        match self {
            Member::A => Member::B,
            Member::B => Member::C,
            Member::C => Member::A,
        }
    }

    pub fn prev(self) -> Member {
        self.next().next()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Member::A => "A",
            Member::B => "B",
            Member::C => "C",
        }
    }

    /// Lower-case name of the matching Huang parameter.
    pub fn param_name(self) -> &'static str {
        match self {
            Member::A => "a",
            Member::B => "b",
            Member::C => "c",
        }
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rejected parameter tuple, naming the violated condition and a witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("assumption violated: {0} = 0")]
    ZeroParameter(&'static str),
    #[error("assumption violated: q^4 = 1")]
    QFourthPowerOne,
    #[error("assumption violated: clause (i): q^{exponent} = 1")]
    Clause1 { exponent: i64 },
    #[error("assumption violated: clause (ii): {param}^2 = q^{exponent}")]
    Clause2 { param: &'static str, exponent: i64 },
    #[error("assumption violated: clause (iii): {product} = q^{exponent}")]
    Clause3 { product: &'static str, exponent: i64 },
    #[error("parameter {0} does not belong to the chosen field")]
    ForeignElement(&'static str),
}

impl ParamError {
    /// Short clause identifier: `"q4"`, `"i"`, `"ii"`, `"iii"`, or `"nonzero"`.
    pub fn clause(&self) -> &'static str {
        match self {
            ParamError::ZeroParameter(_) | ParamError::ForeignElement(_) => "nonzero",
            ParamError::QFourthPowerOne => "q4",
            ParamError::Clause1 { .. } => "i",
            ParamError::Clause2 { .. } => "ii",
            ParamError::Clause3 { .. } => "iii",
        }
    }
}

/// Validated Huang data over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct QRacahParams<F: Field> {
    field: F,
    q: F::Elem,
    a: F::Elem,
    b: F::Elem,
    c: F::Elem,
    d: usize,
}

impl<F: Field> fmt::Debug for QRacahParams<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QRacahParams {{ field: {}, q: {}, a: {}, b: {}, c: {}, d: {} }}",
            self.field, self.q, self.a, self.b, self.c, self.d
        )
    }
}

/// Check every validity condition and return the accepted parameters.
///
/// Conditions are tested in order: nonzero parameters, `q^4 != 1`, then
/// clauses (i) `q^{2i} != 1` for `1 <= i <= d`, (ii) none of `a^2, b^2, c^2`
/// among `q^{2d-2}, q^{2d-4}, ..., q^{2-2d}`, and (iii) none of
/// `abc, a^-1 bc, ab^-1 c, abc^-1` among `q^{d-1}, q^{d-3}, ..., q^{1-d}`.
pub fn validate_params<F: Field>(
    field: &F,
    q: F::Elem,
    a: F::Elem,
    b: F::Elem,
    c: F::Elem,
    d: usize,
) -> Result<QRacahParams<F>, ParamError> {
    for (name, x) in [("q", &q), ("a", &a), ("b", &b), ("c", &c)] {
        if !field.contains(x) {
            return Err(ParamError::ForeignElement(name));
        }
        if x.is_zero() {
            return Err(ParamError::ZeroParameter(name));
        }
    }
    let one = field.one();
    let qpow = |n: i64| pow_nonzero(&q, n);
    if qpow(4) == one {
        return Err(ParamError::QFourthPowerOne);
    }
    let d_i = d as i64;
    for i in 1..=d_i {
        if qpow(2 * i) == one {
            return Err(ParamError::Clause1 { exponent: 2 * i });
        }
    }
    let even_exponents: Vec<i64> = (0..(2 * d_i - 1).max(0)).map(|k| 2 * d_i - 2 - 2 * k).collect();
    for (param, x) in [("a", &a), ("b", &b), ("c", &c)] {
        let sq = x.square();
        if let Some(&e) = even_exponents.iter().find(|&&e| qpow(e) == sq) {
            return Err(ParamError::Clause2 { param, exponent: e });
        }
    }
    let (ai, bi, ci) = (inv_nonzero(&a), inv_nonzero(&b), inv_nonzero(&c));
    let products = [
        ("abc", a.clone() * &b * &c),
        ("a^-1bc", ai * &b * &c),
        ("ab^-1c", a.clone() * &bi * &c),
        ("abc^-1", a.clone() * &b * &ci),
    ];
    let odd_exponents: Vec<i64> = (0..d_i).map(|k| d_i - 1 - 2 * k).collect();
    for (product, x) in &products {
        if let Some(&e) = odd_exponents.iter().find(|&&e| qpow(e) == *x) {
            return Err(ParamError::Clause3 { product, exponent: e });
        }
    }
    Ok(QRacahParams {
        field: field.clone(),
        q,
        a,
        b,
        c,
        d,
    })
}

impl<F: Field> QRacahParams<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn q(&self) -> &F::Elem {
        &self.q
    }

    pub fn a(&self) -> &F::Elem {
        &self.a
    }

    pub fn b(&self) -> &F::Elem {
        &self.b
    }

    pub fn c(&self) -> &F::Elem {
        &self.c
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The Huang parameter attached to `m`: `a` for A, `b` for B, `c` for C.
    pub fn param(&self, m: Member) -> &F::Elem {
        match m {
            Member::A => &self.a,
            Member::B => &self.b,
            Member::C => &self.c,
        }
    }

    /// `q^n`.
    pub fn qpow(&self, n: i64) -> F::Elem {
        pow_nonzero(&self.q, n)
    }

    /// `x^n` for the parameter of `m`.
    pub fn ppow(&self, m: Member, n: i64) -> F::Elem {
        pow_nonzero(self.param(m), n)
    }

    /// `x + x^-1` for the parameter of `m`.
    pub fn param_sum(&self, m: Member) -> F::Elem {
        self.param(m).clone() + &self.ppow(m, -1)
    }

    /// `[n]_q`.
    pub fn bracket(&self, n: i64) -> F::Elem {
        q_bracket(n, &self.q).expect("q^2 != 1 for validated parameters")
    }

    /// `x q^{2i-d} + x^-1 q^{d-2i}` for the parameter of `m`.
    pub fn eigenvalue(&self, m: Member, i: usize) -> F::Elem {
        let e = 2 * i as i64 - self.d as i64;
        self.param(m).clone() * &self.qpow(e) + &(self.ppow(m, -1) * &self.qpow(-e))
    }

    /// Eigenvalues `θ_0..θ_d` (or the primed sequences) of `m`.
    pub fn eigenvalues(&self, m: Member) -> Vec<F::Elem> {
        (0..=self.d).map(|i| self.eigenvalue(m, i)).collect()
    }

    /// The constant `α` of the cyclic relation for `m`:
    /// `((x+x^-1)(q^{d+1}+q^{-d-1}) + (y+y^-1)(z+z^-1)) / (q+q^-1)`.
    pub fn alpha(&self, m: Member) -> F::Elem {
        let d = self.d as i64;
        let num = self.param_sum(m) * &(self.qpow(d + 1) + &self.qpow(-d - 1))
            + &(self.param_sum(m.next()) * &self.param_sum(m.prev()));
        num * &inv_nonzero(&(self.q.clone() + &self.qpow(-1)))
    }

    fn split_common(&self, i: usize) -> F::Elem {
        let (i, d) = (i as i64, self.d as i64);
        self.qpow(d + 1) * &(self.qpow(i) - &self.qpow(-i)) * &(self.qpow(i - d - 1) - &self.qpow(d - i + 1))
    }

    /// `φ_i`, the superdiagonal of B in the first basis.
    pub fn split_first(&self, i: usize) -> F::Elem {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let ii = i as i64;
        let shift = self.qpow(ii - self.d as i64 - 1);
        let abc = a.clone() * b * c;
        let abci = a.clone() * b * &inv_nonzero(c);
        inv_nonzero(&(a.clone() * b))
            * &self.split_common(i)
            * &(self.qpow(-ii) - &(abc * &shift))
            * &(self.qpow(-ii) - &(abci * &shift))
    }

    /// `ϕ_i`, the superdiagonal of B in the second basis.
    pub fn split_second(&self, i: usize) -> F::Elem {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let ii = i as i64;
        let shift = self.qpow(ii - self.d as i64 - 1);
        let ai = inv_nonzero(a);
        let aibc = ai.clone() * b * c;
        let aibci = ai * b * &inv_nonzero(c);
        a.clone()
            * &inv_nonzero(b)
            * &self.split_common(i)
            * &(self.qpow(-ii) - &(aibc * &shift))
            * &(self.qpow(-ii) - &(aibci * &shift))
    }

    pub fn eigen_data(&self) -> EigenData<F> {
        let eig = [Member::A, Member::B, Member::C].map(|m| self.eigenvalues(m));
        for seq in &eig {
            for i in 0..seq.len() {
                for j in 0..i {
                    assert!(
                        seq[i] != seq[j],
                        "eigenvalues must be distinct for validated parameters"
                    );
                }
            }
        }
        let split_first: Vec<_> = (1..=self.d).map(|i| self.split_first(i)).collect();
        let split_second: Vec<_> = (1..=self.d).map(|i| self.split_second(i)).collect();
        assert!(
            split_first.iter().chain(&split_second).all(|x| !x.is_zero()),
            "split sequences must be nonzero for validated parameters"
        );
        let [eig_a, eig_b, eig_c] = eig;
        EigenData {
            eig_a,
            eig_b,
            eig_c,
            alpha_a: self.alpha(Member::A),
            alpha_b: self.alpha(Member::B),
            alpha_c: self.alpha(Member::C),
            split_first,
            split_second,
        }
    }

    /// Replace each flipped parameter by its inverse.
    pub fn invert_huang_data(&self, flips: HuangFlips) -> QRacahParams<F> {
        let pick = |x: &F::Elem, flip: bool| if flip { inv_nonzero(x) } else { x.clone() };
        validate_params(
            &self.field,
            self.q.clone(),
            pick(&self.a, flips.a),
            pick(&self.b, flips.b),
            pick(&self.c, flips.c),
            self.d,
        )
        .expect("validity is invariant under inverting Huang parameters")
    }

    /// Huang data `(b, c, a, d)` of the rotated triple `B, C, A`.
    pub fn rotated(&self) -> QRacahParams<F> {
        validate_params(
            &self.field,
            self.q.clone(),
            self.b.clone(),
            self.c.clone(),
            self.a.clone(),
            self.d,
        )
        .expect("validity is invariant under rotating Huang parameters")
    }

    /// Huang data `(b, a, c, d)` with base `q^-1`, describing the triple `B, A, C`.
    pub fn transposed(&self) -> QRacahParams<F> {
        validate_params(
            &self.field,
            inv_nonzero(&self.q),
            self.b.clone(),
            self.a.clone(),
            self.c.clone(),
            self.d,
        )
        .expect("validity is invariant under swapping a, b and inverting q")
    }
}

/// Derived scalars of a validated parameter set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData<F: Field> {
    /// `θ_i`, eigenvalues of A in standard order.
    pub eig_a: Vec<F::Elem>,
    /// `θ'_i`, eigenvalues of B.
    pub eig_b: Vec<F::Elem>,
    /// `θ''_i`, eigenvalues of C.
    pub eig_c: Vec<F::Elem>,
    pub alpha_a: F::Elem,
    pub alpha_b: F::Elem,
    pub alpha_c: F::Elem,
    /// `φ_1..φ_d` (index 0 holds `φ_1`).
    pub split_first: Vec<F::Elem>,
    /// `ϕ_1..ϕ_d`.
    pub split_second: Vec<F::Elem>,
}

impl<F: Field> EigenData<F> {
    pub fn eig(&self, m: Member) -> &[F::Elem] {
        match m {
            Member::A => &self.eig_a,
            Member::B => &self.eig_b,
            Member::C => &self.eig_c,
        }
    }

    pub fn alpha(&self, m: Member) -> &F::Elem {
        match m {
            Member::A => &self.alpha_a,
            Member::B => &self.alpha_b,
            Member::C => &self.alpha_c,
        }
    }
}

/// Which of `a, b, c` to invert.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct HuangFlips {
    pub a: bool,
    pub b: bool,
    pub c: bool,
}

impl HuangFlips {
    pub const NONE: HuangFlips = HuangFlips {
        a: false,
        b: false,
        c: false,
    };

    /// Bit 0 flips `a`, bit 1 flips `b`, bit 2 flips `c`.
    pub fn from_bits(bits: u8) -> HuangFlips {
        HuangFlips {
            a: bits & 1 != 0,
            b: bits & 2 != 0,
            c: bits & 4 != 0,
        }
    }

    /// All eight subsets of `{a, b, c}`, starting with the empty one.
    pub fn all() -> impl Iterator<Item = HuangFlips> {
        (0u8..8).map(HuangFlips::from_bits)
    }
}

impl fmt::Display for HuangFlips {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [(self.a, "a"), (self.b, "b"), (self.c, "c")]
            .iter()
            .filter(|(on, _)| *on)
            .map(|(_, n)| *n)
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// `x ~ y` iff `x = y` or `xy = 1`.
pub fn is_similar<S: Scalar>(x: &S, y: &S) -> bool {
    x == y || (x.clone() * y) == x.one_like()
}

/// The balanced q-integer `[n]_q = (q^n - q^-n)/(q - q^-1)`.
pub fn q_bracket<S: Scalar>(n: i64, q: &S) -> Result<S, FieldError> {
    let denom = q.clone() - &q.inv()?;
    (q.pow(n)? - &q.pow(-n)?).try_div(&denom)
}

/// `(x; t)_n = (1 - x)(1 - xt)⋯(1 - xt^{n-1})`, with `(x; t)_0 = 1`.
pub fn q_pochhammer<S: Scalar>(x: &S, t: &S, n: usize) -> S {
    let one = x.one_like();
    let mut acc = one.clone();
    let mut xt = x.clone();
    for _ in 0..n {
        acc = acc * &(one.clone() - &xt);
        xt = xt * t;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series does not terminate: first numerator parameter is not base^-{0}")]
    NonTerminating(usize),
    #[error("series undefined: denominator vanishes at term {0}")]
    Undefined(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Terminating basic hypergeometric series
/// `Σ_{k=0}^{n} (top1;t)_k (top2;t)_k / ((t;t)_k (bottom;t)_k) z^k`
/// with `top1 = t^{-n}`. A zero `bottom` is allowed: `(0;t)_k = 1`.
pub fn phi21_terminating<S: Scalar>(
    top1: &S,
    top2: &S,
    bottom: &S,
    base: &S,
    argument: &S,
    termination_index: usize,
) -> Result<S, SeriesError> {
    let n = termination_index;
    if *top1 != base.pow(-(n as i64))? {
        return Err(SeriesError::NonTerminating(n));
    }
    let one = base.one_like();
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut tk = one.clone();
    for k in 0..n {
        let num = (one.clone() - &(top1.clone() * &tk)) * &(one.clone() - &(top2.clone() * &tk)) * argument;
        let den = (one.clone() - &(base.clone() * &tk)) * &(one.clone() - &(bottom.clone() * &tk));
        if den.is_zero() {
            return Err(SeriesError::Undefined(k + 1));
        }
        term = term * &num.try_div(&den)?;
        sum = sum + &term;
        tk = tk * base;
    }
    Ok(sum)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    #[error("sampling exhausted after {0} rejection rounds")]
    Exhausted(usize),
}

/// Upper bound on rejection rounds in [`sample_params`].
pub const MAX_SAMPLE_ROUNDS: usize = 10_000;

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// The generator behind [`sample_params_in_stream`].
///
/// A SplitMix64 sequence started at `seed` yields four words `w0..w3`; the
/// ChaCha8 key is `(w0 ^ p, w1 ^ d, w2, w3)` in little-endian byte order and
/// `stream` selects the ChaCha stream id.
pub fn sampling_rng(p: u64, d: usize, seed: u64, stream: u64) -> ChaCha8Rng {
    let mut state = seed;
    let words = [
        splitmix64(&mut state) ^ p,
        splitmix64(&mut state) ^ d as u64,
        splitmix64(&mut state),
        splitmix64(&mut state),
    ];
    let mut key = [0u8; 32];
    for (chunk, w) in key.chunks_exact_mut(8).zip(words) {
        chunk.copy_from_slice(&w.to_le_bytes());
    }
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(stream);
    rng
}

/// Uniform residue in `[1, p)`: draw a `u64`, reject the top partial block,
/// reduce mod `p - 1`, add one.
fn uniform_nonzero(rng: &mut ChaCha8Rng, p: u64) -> u64 {
    let range = p - 1;
    let limit = u64::MAX - u64::MAX % range;
    loop {
        let v = rng.next_u64();
        if v < limit {
            return 1 + v % range;
        }
    }
}

/// Rejection-sample `(q, a, b, c)` uniformly from the nonzero residues until
/// the tuple validates. Deterministic in `(p, d, seed)`.
pub fn sample_params(field: &PrimeField, d: usize, seed: u64) -> Result<QRacahParams<PrimeField>, SampleError> {
    sample_params_in_stream(field, d, seed, 0)
}

/// As [`sample_params`], drawing from ChaCha stream `stream`; distinct streams
/// give independent samples under one seed.
pub fn sample_params_in_stream(
    field: &PrimeField,
    d: usize,
    seed: u64,
    stream: u64,
) -> Result<QRacahParams<PrimeField>, SampleError> {
    let p = field.modulus();
    let mut rng = sampling_rng(p, d, seed, stream);
    for _ in 0..MAX_SAMPLE_ROUNDS {
        let [q, a, b, c] = [(); 4].map(|_| field.element(uniform_nonzero(&mut rng, p) as i64));
        if let Ok(params) = validate_params(field, q, a, b, c, d) {
            return Ok(params);
        }
    }
    Err(SampleError::Exhausted(MAX_SAMPLE_ROUNDS))
}
