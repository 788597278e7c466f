use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Palette size plus one color id per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Coloring {
    palette_size: u32,
    assignment: Vec<u32>,
}

impl Coloring {
    pub fn new(palette_size: u32, assignment: Vec<u32>) -> Result<Self> {
        if palette_size == 0 {
            return Err(Error::InvalidParameter("palette size must be positive".into()));
        }
        if let Some((vertex, &color)) = assignment.iter().enumerate().find(|(_, &c)| c >= palette_size) {
            return Err(Error::PaletteMismatch {
                vertex,
                color,
                palette: palette_size,
            });
        }
        Ok(Coloring {
            palette_size,
            assignment,
        })
    }

    /// Palette of size `max + 1`.
    pub fn from_assignment(assignment: Vec<u32>) -> Self {
        let palette_size = assignment.iter().max().map_or(1, |m| m + 1);
        Coloring {
            palette_size,
            assignment,
        }
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn colors(&self) -> &[u32] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub(crate) fn set(&mut self, v: usize, color: u32) {
        debug_assert!(color < self.palette_size);
        self.assignment[v] = color;
    }

    /// Checks the coloring can be used with `g`.
    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: g.vertex_count(),
                actual: self.assignment.len(),
            });
        }
        Ok(())
    }
}
