//! Discrete velocity sets for the lattice Boltzmann method.
//!
//! Each stencil carries the lattice velocities `c_i`, the quadrature weights
//! `w_i` and the opposite-direction map used by bounce-back and by the solid
//! collision operators. Opposite directions are stored adjacently so that
//! rest-state moment sums cancel pairwise.

/// Squared lattice speed of sound, `c_s^2 = 1/3` for all supported sets.
pub const CS2: f64 = 1.0 / 3.0;

/// `1 / c_s^2`
pub const INV_CS2: f64 = 3.0;
/// `1 / (2 c_s^4)`
pub const INV_2CS4: f64 = 4.5;
/// `1 / (2 c_s^2)`
pub const INV_2CS2: f64 = 1.5;

/// Largest direction count among the supported stencils.
pub const MAX_Q: usize = 19;

/// A discrete velocity set.
#[derive(Debug)]
pub struct Stencil {
    pub name: &'static str,
    /// Number of directions.
    pub q: usize,
    /// Spatial dimension (2 or 3).
    pub dim: usize,
    /// Integer lattice velocities, z component zero in 2D.
    pub c: &'static [[i32; 3]],
    /// Quadrature weights.
    pub w: &'static [f64],
    /// Map from direction `i` to the direction with `c = -c_i`.
    pub opposite: &'static [usize],
}

impl Stencil {
    #[inline]
    pub fn opposite(&self, i: usize) -> usize {
        self.opposite[i]
    }

    /// Lattice velocity of direction `i` as floats.
    #[inline]
    pub fn cf(&self, i: usize) -> [f64; 3] {
        let c = self.c[i];
        [c[0] as f64, c[1] as f64, c[2] as f64]
    }
}

/// Identifier used by configs to select a stencil at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StencilKind {
    D2Q9,
    D3Q19,
}

impl StencilKind {
    pub fn get(self) -> &'static Stencil {
        match self {
            StencilKind::D2Q9 => &D2Q9,
            StencilKind::D3Q19 => &D3Q19,
        }
    }
}

impl std::str::FromStr for StencilKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "d2q9" => Ok(StencilKind::D2Q9),
            "d3q19" => Ok(StencilKind::D3Q19),
            other => Err(format!("unknown stencil '{other}' (expected d2q9 or d3q19)")),
        }
    }
}

const D2Q9_C: [[i32; 3]; 9] = [
    [0, 0, 0],
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, 0],
    [0, -1, 0],
    [1, 1, 0],
    [-1, -1, 0],
    [1, -1, 0],
    [-1, 1, 0],
];

const D2Q9_W: [f64; 9] = [
    4.0 / 9.0,
    1.0 / 9.0,
    1.0 / 9.0,
    1.0 / 9.0,
    1.0 / 9.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
];

const D2Q9_OPP: [usize; 9] = [0, 2, 1, 4, 3, 6, 5, 8, 7];

pub static D2Q9: Stencil = Stencil {
    name: "D2Q9",
    q: 9,
    dim: 2,
    c: &D2Q9_C,
    w: &D2Q9_W,
    opposite: &D2Q9_OPP,
};

const D3Q19_C: [[i32; 3]; 19] = [
    [0, 0, 0],
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1],
    [1, 1, 0],
    [-1, -1, 0],
    [1, -1, 0],
    [-1, 1, 0],
    [1, 0, 1],
    [-1, 0, -1],
    [1, 0, -1],
    [-1, 0, 1],
    [0, 1, 1],
    [0, -1, -1],
    [0, 1, -1],
    [0, -1, 1],
];

const D3Q19_W: [f64; 19] = [
    1.0 / 3.0,
    1.0 / 18.0,
    1.0 / 18.0,
    1.0 / 18.0,
    1.0 / 18.0,
    1.0 / 18.0,
    1.0 / 18.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
    1.0 / 36.0,
];

const D3Q19_OPP: [usize; 19] = [0, 2, 1, 4, 3, 6, 5, 8, 7, 10, 9, 12, 11, 14, 13, 16, 15, 18, 17];

pub static D3Q19: Stencil = Stencil {
    name: "D3Q19",
    q: 19,
    dim: 3,
    c: &D3Q19_C,
    w: &D3Q19_W,
    opposite: &D3Q19_OPP,
};

#[cfg(test)]
mod tests {
    use super::*;

    fn stencils() -> [&'static Stencil; 2] {
        [&D2Q9, &D3Q19]
    }

    #[test]
    fn weights_sum_to_one_and_are_positive() {
        for st in stencils() {
            let sum: f64 = st.w.iter().sum();
            assert!((sum - 1.0).abs() < 1e-15, "{}: sum = {sum}", st.name);
            assert!(st.w.iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn second_moment_isotropy() {
        // sum_i w_i c_ia c_ib = cs2 * delta_ab, by direct summation
        for st in stencils() {
            for a in 0..3 {
                for b in 0..3 {
                    let mut s = 0.0;
                    for i in 0..st.q {
                        s += st.w[i] * st.c[i][a] as f64 * st.c[i][b] as f64;
                    }
                    let expect = if a == b && a < st.dim { CS2 } else { 0.0 };
                    assert!(
                        (s - expect).abs() < 1e-15,
                        "{}: moment ({a},{b}) = {s}, expected {expect}",
                        st.name
                    );
                }
            }
        }
    }

    #[test]
    fn opposite_is_an_involution_and_negates_velocity() {
        for st in stencils() {
            for i in 0..st.q {
                let o = st.opposite(i);
                assert_eq!(st.opposite(o), i);
                for a in 0..3 {
                    assert_eq!(st.c[o][a], -st.c[i][a]);
                }
            }
        }
    }

    #[test]
    fn first_moment_vanishes() {
        for st in stencils() {
            for a in 0..3 {
                let s: f64 = (0..st.q).map(|i| st.w[i] * st.c[i][a] as f64).sum();
                assert_eq!(s, 0.0, "{}: axis {a}", st.name);
            }
        }
    }
}
