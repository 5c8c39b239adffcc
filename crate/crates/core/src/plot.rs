//! Plane pictures of a level partition: every point of the frame is drawn
//! as its level glyph, an ideal mark, or nothing.

use std::fmt::Write;

use crate::ideal::GoodIdeal;
use crate::lattice::Point;
use crate::levels::LevelPartition;
use crate::semigroup::{GoodSemigroup, Membership};

/// `1..9`, then `a..z`, then `?`.
pub fn level_glyph(i: usize) -> char {
    match i {
        1..=9 => char::from(b'0' + i as u8),
        10..=35 => char::from(b'a' + (i - 10) as u8),
        _ => '?',
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Cell {
    Level(usize),
    Ideal,
    Empty,
}

fn cell(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition, a: &Point) -> Cell {
    match p.level_of(a) {
        Some(i) => Cell::Level(i),
        None if e.contains(a) => Cell::Ideal,
        None => {
            debug_assert!(!s.contains(a));
            Cell::Empty
        }
    }
}

/// Rows from the top of the frame down; `o` marks the ideal, `.` the rest.
/// The last row and column stand for everything beyond.
pub fn ascii(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition) -> String {
    assert_eq!(p.dim(), 2, "plots are planar");
    let cap = p.frame.cap();
    let mut out = String::new();
    for y in (0..=cap[1]).rev() {
        let label = if y == cap[1] { "inf".to_string() } else { y.to_string() };
        write!(out, "{label:>4} ").unwrap();
        for x in 0..=cap[0] {
            out.push(match cell(s, e, p, &Point::from([x, y])) {
                Cell::Level(i) => level_glyph(i),
                Cell::Ideal => 'o',
                Cell::Empty => '.',
            });
        }
        out.push('\n');
    }
    out
}

/// A fixed-size SVG with one glyph per level element, filled dots for the
/// ideal, and ticks at the given coordinates of each axis.
pub fn svg(s: &GoodSemigroup, e: &GoodIdeal, p: &LevelPartition, ticks: [&[i64]; 2]) -> String {
    assert_eq!(p.dim(), 2, "plots are planar");
    const SIZE: i64 = 640;
    const MARGIN: i64 = 40;
    let cap = p.frame.cap();
    let step = ((SIZE - 2 * MARGIN) / (cap[0].max(cap[1]) + 1)).max(1);
    let px = |x: i64| MARGIN + x * step + step / 2;
    let py = |y: i64| SIZE - MARGIN - y * step - step / 2;
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(out, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    let (x0, y0) = (MARGIN, SIZE - MARGIN);
    writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#, SIZE - MARGIN).unwrap();
    writeln!(out, r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN}" stroke="black"/>"#).unwrap();
    for &t in ticks[0] {
        let x = px(t);
        writeln!(out, r#"<line x1="{x}" y1="{y0}" x2="{x}" y2="{}" stroke="black"/>"#, y0 + 5).unwrap();
        writeln!(out, r#"<text x="{x}" y="{}" font-size="10" text-anchor="middle">{t}</text>"#, y0 + 16).unwrap();
    }
    for &t in ticks[1] {
        let y = py(t);
        writeln!(out, r#"<line x1="{}" y1="{y}" x2="{x0}" y2="{y}" stroke="black"/>"#, x0 - 5).unwrap();
        writeln!(out, r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{t}</text>"#, x0 - 7, y + 3).unwrap();
    }
    let r = (step / 5).max(1);
    let font = (step * 3 / 4).clamp(6, 16);
    for y in 0..=cap[1] {
        for x in 0..=cap[0] {
            match cell(s, e, p, &Point::from([x, y])) {
                Cell::Level(i) => writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-size="{font}" text-anchor="middle">{}</text>"#,
                    px(x),
                    py(y) + font / 3,
                    level_glyph(i)
                )
                .unwrap(),
                Cell::Ideal => writeln!(out, r#"<circle cx="{}" cy="{}" r="{r}" fill="black"/>"#, px(x), py(y)).unwrap(),
                Cell::Empty => {}
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
