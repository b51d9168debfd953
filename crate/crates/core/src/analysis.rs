//! Lazily computed, cached structure and Engel data for one finite group.

use std::cell::OnceCell;

use crate::engel::{engel_report_from_table, EngelReport, EngelTable, DEFAULT_MAX_N};
use crate::error::Result;
use crate::group::{Element, FiniteGroup};
use crate::structure::{self, radical_candidates, RadicalReport, SeriesKind, SeriesResult};
use crate::subgroup::Subgroup;

pub struct Analysis<'g> {
    group: &'g FiniteGroup,
    max_n: usize,
    table: OnceCell<EngelTable>,
    engel: OnceCell<EngelReport>,
    radicals: OnceCell<RadicalReport<'g>>,
    upper: OnceCell<SeriesResult<'g>>,
    lower: OnceCell<SeriesResult<'g>>,
    derived: OnceCell<SeriesResult<'g>>,
}

fn get_or_try<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v))
}

impl<'g> Analysis<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        Self::with_max_n(group, DEFAULT_MAX_N)
    }

    pub fn with_max_n(group: &'g FiniteGroup, max_n: usize) -> Self {
        Analysis {
            group,
            max_n: max_n.max(1),
            table: OnceCell::new(),
            engel: OnceCell::new(),
            radicals: OnceCell::new(),
            upper: OnceCell::new(),
            lower: OnceCell::new(),
            derived: OnceCell::new(),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn table(&self) -> Result<&EngelTable> {
        get_or_try(&self.table, || EngelTable::new(self.group))
    }

    pub fn engel(&self) -> Result<&EngelReport> {
        get_or_try(&self.engel, || engel_report_from_table(self.group, self.table()?, self.max_n))
    }

    /// The four radicals as computed, not yet compared with each other.
    pub fn radicals(&self) -> Result<&RadicalReport<'g>> {
        get_or_try(&self.radicals, || radical_candidates(self.group))
    }

    pub fn series(&self, kind: SeriesKind) -> Result<&SeriesResult<'g>> {
        let cell = match kind {
            SeriesKind::UpperCentral => &self.upper,
            SeriesKind::LowerCentral => &self.lower,
            SeriesKind::Derived => &self.derived,
        };
        get_or_try(cell, || structure::series(self.group, kind))
    }

    /// Hypercenter: the final term of the upper central series.
    pub fn hypercenter(&self) -> Result<&Subgroup<'g>> {
        Ok(self.series(SeriesKind::UpperCentral)?.last())
    }

    /// `ζᵢ(G)`, repeating the hypercenter past stabilization.
    pub fn zeta(&self, i: usize) -> Result<&Subgroup<'g>> {
        Ok(self.series(SeriesKind::UpperCentral)?.term(i))
    }

    pub fn nilpotency_class(&self) -> Result<Option<usize>> {
        let s = self.series(SeriesKind::LowerCentral)?;
        Ok(s.last().is_trivial().then(|| s.length()))
    }

    pub fn derived_length(&self) -> Result<Option<usize>> {
        let s = self.series(SeriesKind::Derived)?;
        Ok(s.last().is_trivial().then(|| s.length()))
    }

    /// Least `n` with `[x, ₙ y] = 1`.
    pub fn depth(&self, x: Element, y: Element) -> Result<Option<usize>> {
        Ok(self.table()?.depth(x, y))
    }

    pub fn in_left(&self, a: Element, n: usize) -> Result<bool> {
        Ok(self.table()?.left(a).length.is_some_and(|l| l <= n))
    }

    pub fn in_right(&self, a: Element, n: usize) -> Result<bool> {
        Ok(self.table()?.right(a).length.is_some_and(|l| l <= n))
    }
}
