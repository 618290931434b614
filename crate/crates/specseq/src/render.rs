//! Text renderers for computed pages: dimension tables, CSV, and TikZ lattice
//! pictures with differential arrows.
//!
//! Renderers are pure functions of the computed data; identical inputs give
//! byte-identical output.

use crate::spectral::{ConvergenceReport, Page, SpectralSequence, Verdict};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum RenderFormat {
    Table,
    Csv,
    Tikz,
}

impl std::str::FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(RenderFormat::Table),
            "csv" => Ok(RenderFormat::Csv),
            "tikz" => Ok(RenderFormat::Tikz),
            other => Err(format!("unknown format {other:?}; expected table, csv or tikz")),
        }
    }
}

/// A nonzero differential arrow of bidegree (r, 1 − r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub from: (i64, i64),
    pub to: (i64, i64),
    pub rank: usize,
}

/// Everything a page renderer needs: the dimension lattice and the nonzero
/// arrows with their ranks.
#[derive(Debug, Clone)]
pub struct PageSummary {
    pub r: usize,
    pub dims: BTreeMap<(i64, i64), usize>,
    pub arrows: Vec<Arrow>,
}

impl PageSummary {
    pub fn of(page: &Page) -> PageSummary {
        let dims = page.cells().map(|(&k, c)| (k, c.dim())).collect();
        let arrows = page
            .differentials()
            .filter(|(_, m)| !m.is_zero())
            .map(|(&(p, q), m)| {
                let to = (p + page.r as i64, q - page.r as i64 + 1);
                debug_assert_eq!((to.0 - p, to.1 - q), (page.r as i64, 1 - page.r as i64));
                Arrow {
                    from: (p, q),
                    to,
                    rank: m.rank(),
                }
            })
            .collect();
        PageSummary {
            r: page.r,
            dims,
            arrows,
        }
    }
}

/// A run of pages plus the convergence verdict footer.
#[derive(Debug, Clone)]
pub struct PageReport {
    pub pages: Vec<PageSummary>,
    pub verdict: Option<Verdict>,
}

impl PageReport {
    pub fn of(ss: &SpectralSequence, report: Option<&ConvergenceReport>) -> PageReport {
        PageReport {
            pages: ss.pages().iter().map(PageSummary::of).collect(),
            verdict: report.map(|r| r.verdict),
        }
    }
}

fn bounds(dims: &BTreeMap<(i64, i64), usize>) -> Option<(i64, i64, i64, i64)> {
    let mut it = dims.keys();
    let &(p0, q0) = it.next()?;
    let mut bounds = (p0, p0, q0, q0);
    for &(p, q) in dims.keys() {
        bounds.0 = bounds.0.min(p);
        bounds.1 = bounds.1.max(p);
        bounds.2 = bounds.2.min(q);
        bounds.3 = bounds.3.max(q);
    }
    Some(bounds)
}

/// Dimension table with q descending down the rows and p ascending across
/// the columns, followed by the arrow list.
pub fn render_page_table(page: &PageSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "E_{} page", page.r);
    match bounds(&page.dims) {
        None => {
            let _ = writeln!(out, "  (empty window)");
        }
        Some((p_min, p_max, q_min, q_max)) => {
            let width = page
                .dims
                .values()
                .map(|d| d.to_string().len())
                .max()
                .unwrap_or(1)
                .max(1);
            for q in (q_min..=q_max).rev() {
                let _ = write!(out, "  q={q:>3} |");
                for p in p_min..=p_max {
                    let d = page.dims.get(&(p, q)).copied().unwrap_or(0);
                    let _ = write!(out, " {d:>width$}");
                }
                let _ = writeln!(out);
            }
            let _ = write!(out, "        +");
            for _ in p_min..=p_max {
                let _ = write!(out, "{}", "-".repeat(width + 1));
            }
            let _ = writeln!(out);
            let _ = write!(out, "         ");
            for p in p_min..=p_max {
                let _ = write!(out, " {p:>width$}");
            }
            let _ = writeln!(out, "   (p)");
        }
    }
    if page.arrows.is_empty() {
        let _ = writeln!(out, "  no nonzero d_{} arrows", page.r);
    } else {
        for a in &page.arrows {
            let _ = writeln!(
                out,
                "  d_{}: ({}, {}) -> ({}, {})  rank {}",
                page.r, a.from.0, a.from.1, a.to.0, a.to.1, a.rank
            );
        }
    }
    out
}

/// One CSV row per cell: `r,p,q,dim,d_rank`.
pub fn render_page_csv(page: &PageSummary) -> String {
    let mut out = String::new();
    for (&(p, q), &dim) in &page.dims {
        let rank = page
            .arrows
            .iter()
            .find(|a| a.from == (p, q))
            .map_or(0, |a| a.rank);
        let _ = writeln!(out, "{},{},{},{},{}", page.r, p, q, dim, rank);
    }
    out
}

/// A TikZ picture of the page: dots on the lattice, dimension labels at the
/// nonzero cells, arrows for the nonzero differentials.
pub fn render_page_tikz(page: &PageSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "% E_{} page", page.r);
    let _ = writeln!(out, "\\begin{{tikzpicture}}[>=Stealth]");
    if let Some((p_min, p_max, q_min, q_max)) = bounds(&page.dims) {
        let _ = writeln!(out, "\\draw ({p_min},{q_min}) -- ({},{q_min});", p_max + 1);
        let _ = writeln!(out, "\\draw ({p_min},{q_min}) -- ({p_min},{});", q_max + 1);
        let _ = writeln!(
            out,
            "\\draw ({}, {}) node {{$p$}} ({}, {}) node {{$q$}};",
            p_max + 1,
            q_min,
            p_min,
            q_max + 1
        );
        for q in q_min..=q_max {
            for p in p_min..=p_max {
                let _ = writeln!(out, "\\filldraw ({p},{q}) circle [radius=2pt];");
                if let Some(&d) = page.dims.get(&(p, q)) {
                    if d > 0 {
                        let _ = writeln!(
                            out,
                            "\\draw ({p},{q}) node[above right] {{\\tiny ${d}$}};"
                        );
                    }
                }
            }
        }
    }
    for a in &page.arrows {
        let _ = writeln!(
            out,
            "\\draw[->] ({},{}) -- ({},{});",
            a.from.0, a.from.1, a.to.0, a.to.1
        );
    }
    let _ = writeln!(out, "\\end{{tikzpicture}}");
    out
}

pub fn render_page(page: &PageSummary, format: RenderFormat) -> String {
    match format {
        RenderFormat::Table => render_page_table(page),
        RenderFormat::Csv => render_page_csv(page),
        RenderFormat::Tikz => render_page_tikz(page),
    }
}

/// Renders a whole report. CSV output carries a header row; TikZ output is a
/// standalone document with one picture per page.
pub fn render_report(report: &PageReport, format: RenderFormat) -> String {
    let mut out = String::new();
    match format {
        RenderFormat::Csv => {
            let _ = writeln!(out, "r,p,q,dim,d_rank");
            for page in &report.pages {
                out.push_str(&render_page_csv(page));
            }
        }
        RenderFormat::Table => {
            for page in &report.pages {
                out.push_str(&render_page_table(page));
                out.push('\n');
            }
        }
        RenderFormat::Tikz => {
            let _ = writeln!(out, "\\documentclass{{standalone}}");
            let _ = writeln!(out, "\\usepackage{{tikz}}");
            let _ = writeln!(out, "\\usetikzlibrary{{arrows.meta}}");
            let _ = writeln!(out, "\\begin{{document}}");
            for page in &report.pages {
                out.push_str(&render_page_tikz(page));
            }
            let _ = writeln!(out, "\\end{{document}}");
        }
    }
    if let Some(verdict) = report.verdict {
        let line = match verdict {
            Verdict::Converged => "converged",
            Verdict::Mismatch => "MISMATCH",
        };
        match format {
            RenderFormat::Tikz => {
                let _ = writeln!(out, "% verdict: {line}");
            }
            _ => {
                let _ = writeln!(out, "verdict: {line}");
            }
        }
    }
    out
}

/// Degree-indexed dimension table for cohomology output.
pub fn render_dim_table(title: &str, dims: &[usize]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{title}");
    for (n, d) in dims.iter().enumerate() {
        let _ = writeln!(out, "  H^{n}: dim {d}");
    }
    out
}
