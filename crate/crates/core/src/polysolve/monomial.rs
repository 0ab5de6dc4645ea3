use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a [`Monomial`] can carry.
pub const MAX_VARIABLES: usize = 32;

/// Exponent vector of a power product, stored inline.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARIABLES],
    nvars: u8,
    degree: u16,
}

impl Monomial {
    /// # Panics
    /// If `nvars` exceeds [`MAX_VARIABLES`].
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARIABLES, "at most {MAX_VARIABLES} variables are supported");
        Monomial { exps: [0; MAX_VARIABLES], nvars: nvars as u8, degree: 0 }
    }

    pub fn var(nvars: usize, i: usize, exp: u8) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = exp;
        m.degree = exp as u16;
        m
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(&exps);
        m.degree = exps.iter().map(|&e| e as u16).sum();
        m
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars as usize]
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u8, u8) -> u8) -> Monomial {
        let mut m = *self;
        let mut degree = 0u16;
        for (x, &y) in m.exps.iter_mut().zip(other.exps.iter()) {
            *x = f(*x, y);
            degree += *x as u16;
        }
        m.degree = degree;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u8::max)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a + b)
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        self.zip_with(other, |a, b| a - b)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Term orders. Variables are ranked x₁ < x₂ < … < xₙ in both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher total degree first, then the
    /// smaller exponent in the lowest-ranked differing variable wins.
    #[default]
    DegRevLex,
    /// Lexicographic, comparing from xₙ down to x₁.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    for (x, y) in a.exps.iter().zip(b.exps.iter()) {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            other => return other.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            },
        }
    }
}
