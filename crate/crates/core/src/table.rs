//! Raw binary operation tables on `0..size`, with no axioms imposed.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("table has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("entry {x}*{y} = {value} is outside 0..{size}")]
    OutOfRange { x: usize, y: usize, value: usize, size: usize },
}

/// `table[x * size + y] = x * y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinTable {
    size: usize,
    table: Vec<usize>,
}

impl BinTable {
    pub fn new(size: usize, table: Vec<usize>) -> Result<Self, TableError> {
        if table.len() != size * size {
            return Err(TableError::WrongLength { expected: size * size, got: table.len() });
        }
        if let Some(i) = table.iter().position(|&e| e >= size) {
            return Err(TableError::OutOfRange { x: i / size, y: i % size, value: table[i], size });
        }
        Ok(BinTable { size, table })
    }

    pub fn from_fn(size: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self, TableError> {
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                table.push(op(x, y));
            }
        }
        BinTable::new(size, table)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.size..(x + 1) * self.size]
    }

    pub fn entries(&self) -> &[usize] {
        &self.table
    }

    /// `image(x * y) = image(x) * image(y)` for all pairs.
    pub fn preserved_by(&self, target: &BinTable, image: &[usize]) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| image[self.op(x, y)] == target.op(image[x], image[y])))
    }
}
