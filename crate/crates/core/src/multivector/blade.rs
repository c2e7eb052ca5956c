use std::fmt;

/// Basis blade `ζ_{i1} ζ_{i2} ... ζ_{ik}` with `i1 < i2 < ... < ik`, stored
/// as a bitmask of 0-based generator indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub fn generator(index: usize) -> Self {
        Blade(1 << index)
    }

    /// Blade for a set of distinct 0-based indices; `None` on repeats.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if bits & (1 << i) != 0 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Blade(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << index) != 0
    }

    /// Highest generator index plus one.
    pub fn span(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0)
    }

    /// `self ∧ other = sign · (self | other)`, or `None` if they share a
    /// generator.
    pub fn wedge(self, other: Blade) -> Option<(i32, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // inversions: pairs (x in self, y in other) with x > y
        let mut swaps = 0;
        for x in self.indices() {
            swaps += (other.0 & ((1u32 << x) - 1)).count_ones();
        }
        Some((parity(swaps), Blade(self.0 | other.0)))
    }

    /// Right Grassmann derivative `self ←∂/∂ζ_index`.
    pub fn right_derivative(self, index: usize) -> Option<(i32, Blade)> {
        if !self.contains(index) {
            return None;
        }
        let above = (self.0 >> (index + 1)).count_ones();
        Some((parity(above), Blade(self.0 & !(1 << index))))
    }

    /// Left Grassmann derivative `→∂/∂ζ_index self`.
    pub fn left_derivative(self, index: usize) -> Option<(i32, Blade)> {
        if !self.contains(index) {
            return None;
        }
        let below = (self.0 & ((1u32 << index) - 1)).count_ones();
        Some((parity(below), Blade(self.0 & !(1 << index))))
    }
}

fn parity(n: u32) -> i32 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Canonical print order: by grade, then lexicographic index list.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// `e1e2` (1-based); the scalar blade prints as `1`.
impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Blade({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        let e1 = Blade::generator(0);
        let e2 = Blade::generator(1);
        assert_eq!(e1.wedge(e2), Some((1, Blade::from_bits(0b11))));
        assert_eq!(e2.wedge(e1), Some((-1, Blade::from_bits(0b11))));
        assert_eq!(e1.wedge(e1), None);
        let e13 = Blade::from_indices(&[0, 2]).unwrap();
        // e2 ∧ e1e3 = -e1e2e3
        assert_eq!(e2.wedge(e13), Some((-1, Blade::from_bits(0b111))));
    }

    #[test]
    fn derivatives() {
        let e12 = Blade::from_bits(0b11);
        assert_eq!(e12.right_derivative(0), Some((-1, Blade::generator(1))));
        assert_eq!(e12.right_derivative(1), Some((1, Blade::generator(0))));
        assert_eq!(e12.left_derivative(0), Some((1, Blade::generator(1))));
        assert_eq!(e12.left_derivative(1), Some((-1, Blade::generator(0))));
        assert_eq!(Blade::generator(2).left_derivative(0), None);
    }

    #[test]
    fn ordering_and_display() {
        let mut v = vec![Blade::from_bits(0b11), Blade::generator(1), Blade::SCALAR, Blade::generator(0)];
        v.sort();
        let s: Vec<String> = v.iter().map(|b| b.to_string()).collect();
        assert_eq!(s, ["1", "e1", "e2", "e1e2"]);
        assert_eq!(Blade::from_indices(&[1, 1]), None);
    }
}
