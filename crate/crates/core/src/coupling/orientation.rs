//! The eight symmetries of the diamond's square, acting on Cartesian points
//! about the centre `(n, n)`.

use crate::lattice::DiamondCoord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrientationMap {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    MirrorX,
    MirrorY,
    Transpose,
    AntiTranspose,
}

impl OrientationMap {
    pub const ALL: [OrientationMap; 8] = [
        OrientationMap::Identity,
        OrientationMap::Rotate90,
        OrientationMap::Rotate180,
        OrientationMap::Rotate270,
        OrientationMap::MirrorX,
        OrientationMap::MirrorY,
        OrientationMap::Transpose,
        OrientationMap::AntiTranspose,
    ];

    /// The orientation the closed form is evaluated in, fixed by calibration
    /// against the Kasteleyn inverse.
    pub const CALIBRATED: OrientationMap = OrientationMap::Identity;

    fn matrix(self) -> [[i64; 2]; 2] {
        match self {
            OrientationMap::Identity => [[1, 0], [0, 1]],
            OrientationMap::Rotate90 => [[0, -1], [1, 0]],
            OrientationMap::Rotate180 => [[-1, 0], [0, -1]],
            OrientationMap::Rotate270 => [[0, 1], [-1, 0]],
            OrientationMap::MirrorX => [[-1, 0], [0, 1]],
            OrientationMap::MirrorY => [[1, 0], [0, -1]],
            OrientationMap::Transpose => [[0, 1], [1, 0]],
            OrientationMap::AntiTranspose => [[0, -1], [-1, 0]],
        }
    }

    pub fn apply_cartesian(self, n: u32, p: (i64, i64)) -> (i64, i64) {
        let c = i64::from(n);
        let [[a, b], [cc, d]] = self.matrix();
        let (x, y) = (p.0 - c, p.1 - c);
        (a * x + b * y + c, cc * x + d * y + c)
    }

    /// The vertex at the image of `v`'s Cartesian point. Its color is read off
    /// the image point, so maps that swap the two colors return the other one.
    pub fn apply(self, n: u32, v: &DiamondCoord) -> DiamondCoord {
        DiamondCoord::from_cartesian(self.apply_cartesian(n, v.cartesian()))
            .expect("symmetries of the diamond keep vertices on vertices")
    }

    /// Whether white vertices stay white.
    pub fn preserves_color(self) -> bool {
        let p = DiamondCoord::white(1, 1);
        self.apply(1, &p).is_white()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_diamond;

    #[test]
    fn permutes_the_board() {
        for n in 1..=4u32 {
            let b = build_diamond(n).unwrap();
            for g in OrientationMap::ALL {
                let mut img: Vec<_> = b.whites().iter().chain(b.blacks()).map(|v| g.apply(n, v)).collect();
                img.sort();
                let mut all: Vec<_> = b.whites().iter().chain(b.blacks()).copied().collect();
                all.sort();
                assert_eq!(img, all, "{g:?}");
                for (w, bl) in b.edges() {
                    assert!(
                        b.is_edge(&g.apply(n, &w), &g.apply(n, &bl)) || b.is_edge(&g.apply(n, &bl), &g.apply(n, &w))
                    );
                }
            }
        }
    }

    #[test]
    fn four_keep_colors() {
        let keep: Vec<_> = OrientationMap::ALL.into_iter().filter(|g| g.preserves_color()).collect();
        assert_eq!(
            keep,
            [OrientationMap::Identity, OrientationMap::Rotate180, OrientationMap::MirrorX, OrientationMap::MirrorY]
        );
    }
}
