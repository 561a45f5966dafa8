use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex counts per colour, where a colour is a subset of `{0..q}` and is
/// stored as a bitmask indexing `counts`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorHistogram {
    q: usize,
    counts: Vec<u64>,
}

impl ColorHistogram {
    pub fn zero(q: usize) -> Self {
        assert!(q < 16, "colour sets are bitmasks over at most 15 roots");
        ColorHistogram { q, counts: vec![0; 1 << q] }
    }

    pub fn from_counts(q: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.len() != 1 << q {
            return Err(Error::invalid(format!("histogram over {q} roots needs {} entries", 1 << q)));
        }
        Ok(ColorHistogram { q, counts })
    }

    /// Histogram of a vertex set given the colour mask of each vertex.
    pub fn from_colors(q: usize, colors: impl IntoIterator<Item = usize>) -> Self {
        let mut h = Self::zero(q);
        for c in colors {
            h.counts[c] += 1;
        }
        h
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, color: usize) -> u64 {
        self.counts[color]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn increment(&mut self, color: usize) {
        self.counts[color] += 1;
    }

    pub fn add_assign(&mut self, other: &ColorHistogram) {
        assert_eq!(self.q, other.q);
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &ColorHistogram) -> Option<ColorHistogram> {
        assert_eq!(self.q, other.q);
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(ColorHistogram { q: self.q, counts })
    }

    /// Componentwise `<=`.
    pub fn fits_within(&self, other: &ColorHistogram) -> bool {
        self.q == other.q && self.counts.iter().zip(&other.counts).all(|(a, b)| a <= b)
    }
}

pub fn histogram_add(a: &ColorHistogram, b: &ColorHistogram) -> Result<ColorHistogram> {
    if a.q != b.q {
        return Err(Error::invalid(format!("histograms over {} and {} roots", a.q, b.q)));
    }
    let mut out = a.clone();
    out.add_assign(b);
    Ok(out)
}
