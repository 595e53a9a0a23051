use std::collections::BTreeSet;
use std::fmt::Write;


use super::{validate, Coord, FrameRepresentation};

/// SVG drawing of the frames, y axis pointing up. Frames named in a
/// violation get the class `violation`.
pub fn emit_svg<C: Coord>(rep: &FrameRepresentation<C>) -> String {
    let bad: BTreeSet<usize> = validate(rep).iter().flat_map(|v| v.frames.iter().copied()).collect();
    let f64_of = |c: C| c.to_f64().unwrap_or(0.0);
    let coords = |sel: fn(&super::Frame<C>) -> [C; 2]| rep.frames.iter().flat_map(sel).map(f64_of);
    let min_x = coords(|f| [f.x1, f.x2]).fold(f64::INFINITY, f64::min);
    let max_x = coords(|f| [f.x1, f.x2]).fold(f64::NEG_INFINITY, f64::max);
    let min_y = coords(|f| [f.y1, f.y2]).fold(f64::INFINITY, f64::min);
    let max_y = coords(|f| [f.y1, f.y2]).fold(f64::NEG_INFINITY, f64::max);
    let (min_x, max_x, min_y, max_y) = if rep.frames.is_empty() { (0.0, 1.0, 0.0, 1.0) } else { (min_x, max_x, min_y, max_y) };
    let (w, h) = ((max_x - min_x).max(1.0), (max_y - min_y).max(1.0));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = w.max(h) / 400.0;
    let font = w.max(h) / 40.0;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        min_x - mx,
        -my,
        w + 2.0 * mx,
        h + 2.0 * my
    );
    let _ = writeln!(
        out,
        "<style>.frame{{fill:none;stroke:#222;stroke-width:{stroke}}} .violation{{stroke:#d00;stroke-width:{}}} text{{font-family:sans-serif;font-size:{font}px}}</style>",
        2.0 * stroke
    );
    for f in &rep.frames {
        let (x1, x2, y1, y2) = (f64_of(f.x1), f64_of(f.x2), f64_of(f.y1), f64_of(f.y2));
        let top = max_y - y2;
        let class = if bad.contains(&f.vertex) { "frame violation" } else { "frame" };
        let _ = writeln!(
            out,
            r#"<rect class="{class}" data-vertex="{}" x="{x1}" y="{top}" width="{}" height="{}"/>"#,
            f.vertex,
            x2 - x1,
            y2 - y1
        );
        let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, x1 + stroke * 2.0, top + font, f.vertex);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{build_chandelier, Frame};
    use crate::generators;

    fn rects(svg: &str) -> Vec<(String, String)> {
        let doc = roxmltree::Document::parse(svg).unwrap();
        doc.descendants()
            .filter(|n| n.has_tag_name("rect"))
            .map(|n| (n.attribute("data-vertex").unwrap().to_string(), n.attribute("class").unwrap().to_string()))
            .collect()
    }

    #[test]
    fn single_frame() {
        let rep = FrameRepresentation::new(crate::SimpleGraph::new(1), vec![Frame::new(0, 0i64, 4, 0, 2).unwrap()]);
        assert_eq!(rects(&emit_svg(&rep)).len(), 1);
    }

    #[test]
    fn c5_and_violations() {
        let rep = build_chandelier(&generators::cycle(5), 0).unwrap();
        let r = rects(&emit_svg(&rep));
        assert_eq!(r.len(), 5);
        assert!(r.iter().all(|(_, c)| c == "frame"));
        let mut broken = rep.clone();
        broken.target.remove_edge(0, 1);
        let r = rects(&emit_svg(&broken));
        assert!(r.iter().any(|(_, c)| c.contains("violation")));
    }
}
