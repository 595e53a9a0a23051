//! Subdividing a represented edge by a chain of small frames drawn in a
//! clear strip of the intersection zone.

use super::{compress, validate, Frame, FrameRepresentation};
use crate::error::{Error, Result};

/// How room is made for the chain.
#[derive(Clone, Copy, Debug)]
enum Gadget {
    /// The left side of the piercing frame moves just right of the pierced
    /// frame's right side; needs the zone itself to be clear.
    ShortenPiercer,
    /// The right side of the pierced frame moves just left of the piercer's
    /// left side; needs the full-height strip over the zone to be clear.
    ShortenPierced,
}

/// Replaces the edge `uv` by a path `u, n, n+1, ..., n+k-1, v` of `k` new
/// vertices, `n` being the old vertex count.
pub fn insert_path(rep: &FrameRepresentation<i64>, (u, v): (usize, usize), k: usize) -> Result<FrameRepresentation<i64>> {
    if k == 0 {
        return Err(Error::domain("path insertion needs at least one new vertex"));
    }
    if !rep.target.has_edge(u, v) {
        return Err(Error::domain(format!("{u}{v} is not an edge")));
    }
    let frames = rep.frames_by_vertex()?;
    let (a, b) = if frames[v].pierces(&frames[u]) {
        (u, v)
    } else if frames[u].pierces(&frames[v]) {
        (v, u)
    } else {
        return Err(Error::NotApplicable(format!("frames of {u} and {v} do not cross canonically")));
    };
    for gadget in [Gadget::ShortenPiercer, Gadget::ShortenPierced] {
        if !strip_is_clear(&frames, a, b, gadget) {
            continue;
        }
        let out = apply(rep, &frames, a, b, u, k, gadget)?;
        if validate(&out).is_empty() {
            return Ok(out);
        }
        log::debug!("{gadget:?} gadget on {u}{v} produced an invalid drawing");
    }
    Err(Error::NotApplicable(format!("no clear strip in the intersection zone of {u} and {v}")))
}

fn strip_is_clear(frames: &[Frame<i64>], a: usize, b: usize, gadget: Gadget) -> bool {
    let (fa, fb) = (&frames[a], &frames[b]);
    let (y1, y2) = match gadget {
        Gadget::ShortenPiercer => (fb.y1, fb.y2),
        Gadget::ShortenPierced => (fa.y1, fa.y2),
    };
    frames
        .iter()
        .filter(|f| f.vertex != a && f.vertex != b)
        .all(|f| !f.meets_region(fb.x1, fa.x2, y1, y2))
}

fn apply(
    rep: &FrameRepresentation<i64>,
    frames: &[Frame<i64>],
    a: usize,
    b: usize,
    u: usize,
    k: usize,
    gadget: Gadget,
) -> Result<FrameRepresentation<i64>> {
    let k = k as i64;
    let m = 2 * k + 6;
    let mut out: Vec<Frame<i64>> =
        frames.iter().map(|f| Frame { vertex: f.vertex, x1: f.x1 * m, x2: f.x2 * m, y1: f.y1 * m, y2: f.y2 * m }).collect();
    let (fa, fb) = (out[a], out[b]);
    // chain frame i (0-based, i = 0 meets A) and the x where the chain starts
    let mut chain = Vec::with_capacity(k as usize);
    let start = match gadget {
        Gadget::ShortenPiercer => fa.x2 - 1,
        Gadget::ShortenPierced => fb.x1 - (2 * k + 2),
    };
    for i in 0..k {
        let (y1, y2) = match gadget {
            Gadget::ShortenPiercer => (fb.y1 - (k - i), fb.y2 + (k - i)),
            Gadget::ShortenPierced => (fa.y1 + 1 + i, fa.y2 - 1 - i),
        };
        chain.push(Frame { vertex: 0, x1: start + 2 * i, x2: start + 2 * i + 3, y1, y2 });
    }
    match gadget {
        Gadget::ShortenPiercer => {
            // B's new left side sits between the last two chain x-coordinates
            let last = chain.last_mut().unwrap();
            let s = last.x2;
            last.x2 = s + 1;
            out[b].x1 = s;
            if k == 1 {
                last.x1 = fa.x2 - 1;
            }
        }
        Gadget::ShortenPierced => {
            let t = start + 1;
            out[a].x2 = t;
            let last = chain.last_mut().unwrap();
            last.x2 = fb.x1 + 1;
        }
    }
    let n = rep.vertex_count();
    let from_a = u == a;
    for (i, f) in chain.iter_mut().enumerate() {
        f.vertex = if from_a { n + i } else { n + k as usize - 1 - i };
    }
    out.extend(chain);
    let mut target = rep.target.clone();
    target.remove_edge(a, b);
    for _ in 0..k {
        target.add_vertex();
    }
    let v = if u == a { b } else { a };
    let mut prev = u;
    for i in 0..k as usize {
        target.add_edge(prev, n + i)?;
        prev = n + i;
    }
    target.add_edge(prev, v)?;
    compress(&mut out);
    out.sort_by_key(|f| f.vertex);
    Ok(FrameRepresentation::new(target, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{build_chandelier, build_path, intersection_graph};
    use crate::generators;
    use crate::graph::is_isomorphic;

    fn check(rep: &FrameRepresentation<i64>) {
        let v = validate(rep);
        assert!(v.is_empty(), "{v:?}");
        assert_eq!(intersection_graph(&rep.frames).unwrap(), rep.target);
    }

    #[test]
    fn subdivide_k2() {
        let rep = build_path(2).unwrap();
        for k in 1..5 {
            let out = insert_path(&rep, (0, 1), k).unwrap();
            check(&out);
            assert!(is_isomorphic(&out.target, &generators::path(k + 2)));
            let back = insert_path(&rep, (1, 0), k).unwrap();
            check(&back);
            assert!(back.target.has_edge(1, 2));
        }
    }

    #[test]
    fn subdivide_c4_edge() {
        let rep = build_chandelier(&generators::cycle(4), 0).unwrap();
        let mut done = 0;
        for (u, v) in rep.target.edges() {
            if let Ok(out) = insert_path(&rep, (u, v), 2) {
                check(&out);
                assert!(is_isomorphic(&out.target, &generators::cycle(6)));
                done += 1;
            }
        }
        assert!(done > 0);
    }

    #[test]
    fn blocked_zone() {
        // C crosses the zone of the canonical pair (A, B) from above and below
        let frames = vec![
            Frame::new(0, 0, 10, 0, 10).unwrap(),
            Frame::new(1, 5, 20, 2, 8).unwrap(),
            Frame::new(2, 7, 9, -5, 15).unwrap(),
        ];
        let target = intersection_graph(&frames).unwrap();
        let rep = FrameRepresentation::new(target, frames);
        assert!(matches!(insert_path(&rep, (0, 1), 1), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn rejects_non_edges() {
        let rep = build_path(3).unwrap();
        assert!(insert_path(&rep, (0, 2), 1).is_err());
        assert!(insert_path(&rep, (0, 1), 0).is_err());
    }
}
