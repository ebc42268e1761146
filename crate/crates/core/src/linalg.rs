//! Incremental sparse row echelon form over a field.

use alloc::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Rows are kept with a leading coefficient of one, keyed by pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    ring: Ring,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(ring: Ring) -> Result<Echelon> {
        if !ring.is_field() {
            return Err(Error::UnsupportedRing(ring));
        }
        Ok(Echelon { ring, pivots: BTreeMap::new() })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots; keeps it if independent.
    pub fn insert(&mut self, mut row: SparseRow) -> Result<bool> {
        row.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, coeff)) = row.iter().next() else {
                return Ok(false);
            };
            let coeff = coeff.clone();
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    for (col, c) in pivot {
                        let delta = &coeff * c;
                        let entry = row.entry(*col).or_insert_with(|| Scalar::zero(self.ring));
                        *entry = &*entry - &delta;
                        if entry.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => {
                    let inv = coeff.inv()?;
                    for c in row.values_mut() {
                        *c = &*c * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return Ok(true);
                }
            }
        }
    }
}

/// Rank of a list of sparse rows.
pub fn rank(ring: Ring, rows: impl IntoIterator<Item = SparseRow>) -> Result<usize> {
    let mut ech = Echelon::new(ring)?;
    for row in rows {
        ech.insert(row)?;
    }
    Ok(ech.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn row(ring: Ring, entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, Scalar::from_i64(ring, v))).filter(|(_, v)| !v.is_zero()).collect()
    }

    #[test]
    fn rational_rank() {
        let r = Ring::Rationals;
        let rows = vec![row(r, &[(0, 1), (1, 2)]), row(r, &[(0, 2), (1, 4)]), row(r, &[(1, 3), (2, 1)])];
        assert_eq!(rank(r, rows).unwrap(), 2);
    }

    #[test]
    fn gf2_rank() {
        let r = Ring::GF2;
        let rows = vec![row(r, &[(0, 1), (1, 1)]), row(r, &[(1, 1), (2, 1)]), row(r, &[(0, 1), (2, 1)])];
        assert_eq!(rank(r, rows).unwrap(), 2);
    }

    #[test]
    fn integers_rejected() {
        assert_eq!(Echelon::new(Ring::Integers).unwrap_err(), Error::UnsupportedRing(Ring::Integers));
    }
}
