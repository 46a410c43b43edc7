//! Rhombic tilings of the regular 2n-gon.
//!
//! Sweeping a reduced word of the longest element across the zonogon
//! generated by unit vectors `u_1, ..., u_n` flips one pair of adjacent
//! edges per letter; each flip sweeps out one rhombus. All combinatorial
//! data (which wires cross, which wires lie below) is tracked with
//! integers; floating point only enters through the vertex coordinates.

use std::collections::BTreeSet;
use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::coxeter::Word;
use crate::error::{Error, Result};

/// Angle of `u_1`. With `-π/2` the first boundary edge points straight
/// down, giving the polygon a vertical left side.
pub const DEFAULT_ANGLE_OFFSET: f64 = -FRAC_PI_2;

pub type Point = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Rhombus {
    /// Crossing wires `(a, b)` with `a < b`; edges are `u_a` and `u_b`.
    pub wires: (u8, u8),
    /// Wires on the rows below the crossing, sorted.
    pub below: Vec<u8>,
    pub anchor: Point,
    pub edges: [Point; 2],
}

impl Rhombus {
    /// Corners in counterclockwise order starting at the anchor.
    pub fn corners(&self) -> [Point; 4] {
        let [p, [ax, ay], [bx, by]] = [self.anchor, self.edges[0], self.edges[1]];
        [p, [p[0] + ax, p[1] + ay], [p[0] + ax + bx, p[1] + ay + by], [p[0] + bx, p[1] + by]]
    }

    pub fn area(&self) -> f64 {
        let [a, b] = self.edges;
        (a[0] * b[1] - a[1] * b[0]).abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tiling {
    pub n: usize,
    pub angle_offset: f64,
    pub rhombi: Vec<Rhombus>,
}

pub fn unit_vector(k: usize, n: usize, offset: f64) -> Point {
    let theta = PI * (k as f64 - 1.0) / n as f64 + offset;
    [theta.cos(), theta.sin()]
}

pub fn rhombic_tiling(word: &Word) -> Result<Tiling> {
    rhombic_tiling_with_offset(word, DEFAULT_ANGLE_OFFSET)
}

pub fn rhombic_tiling_with_offset(word: &Word, angle_offset: f64) -> Result<Tiling> {
    let n = word.rank();
    if word.len() != n * (n - 1) / 2 || !word.evaluate().is_longest() {
        return Err(Error::NotLongest { word: word.to_string() });
    }
    let u: Vec<Point> = (0..=n).map(|k| if k == 0 { [0.0, 0.0] } else { unit_vector(k, n, angle_offset) }).collect();
    let mut line: Vec<u8> = (1..=n as u8).collect();
    let mut rhombi = Vec::with_capacity(word.len());
    for &x in word.letters() {
        let p = x as usize - 1;
        let (a, b) = (line[p], line[p + 1]);
        debug_assert!(a < b, "a reduced word of w0 crosses each pair once, in increasing order");
        let mut below: Vec<u8> = line[..p].to_vec();
        let anchor = below.iter().fold([0.0, 0.0], |acc, &c| [acc[0] + u[c as usize][0], acc[1] + u[c as usize][1]]);
        below.sort_unstable();
        rhombi.push(Rhombus { wires: (a, b), below, anchor, edges: [u[a as usize], u[b as usize]] });
        line.swap(p, p + 1);
    }
    Ok(Tiling { n, angle_offset, rhombi })
}

impl Tiling {
    /// Vertices of the tiled 2n-gon, counterclockwise from the origin.
    pub fn polygon(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(2 * self.n);
        let mut p = [0.0, 0.0];
        for sign in [1.0, -1.0] {
            for k in 1..=self.n {
                out.push(p);
                let v = unit_vector(k, self.n, self.angle_offset);
                p = [p[0] + sign * v[0], p[1] + sign * v[1]];
            }
        }
        out
    }

    pub fn polygon_area(&self) -> f64 {
        let poly = self.polygon();
        let m = poly.len();
        let twice: f64 = (0..m)
            .map(|i| {
                let (a, b) = (poly[i], poly[(i + 1) % m]);
                a[0] * b[1] - a[1] * b[0]
            })
            .sum();
        twice.abs() / 2.0
    }

    pub fn total_area(&self) -> f64 {
        self.rhombi.iter().map(Rhombus::area).sum()
    }

    /// Exact identity of the tiling: crossing pairs with the set of wires
    /// below each. Two tilings coincide iff their keys are equal.
    pub fn key(&self) -> BTreeSet<(u8, u8, Vec<u8>)> {
        self.rhombi.iter().map(|r| (r.wires.0, r.wires.1, r.below.clone())).collect()
    }
}
