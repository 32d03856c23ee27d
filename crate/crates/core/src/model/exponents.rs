use super::MinimalModel;

/// Where a model sits among the nested classes of the volume table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub simply_connected: bool,
    /// Nilpotency class `c`.
    pub class: u32,
    pub coformal: bool,
}

impl Classification {
    pub fn of(model: &MinimalModel) -> Option<Self> {
        Some(Self {
            simply_connected: model.is_simply_connected(),
            class: model.nilpotency_class()?,
            coformal: model.is_coformal(),
        })
    }

    pub fn is_simple(&self) -> bool {
        self.class == 1
    }

    pub fn label(&self) -> String {
        let base = if self.simply_connected {
            "simply connected".to_string()
        } else if self.class == 1 {
            "simple".to_string()
        } else {
            format!("{}-step nilpotent", self.class)
        };
        if self.coformal {
            format!("{base}, coformal")
        } else {
            base
        }
    }
}

/// Every cell of the volume table at `(n, c)`, as exponents of `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableCells {
    pub simply_connected_upper: u32,
    pub simply_connected_lower: u32,
    pub simple_upper: u32,
    pub nilpotent_upper: u32,
    pub coformal_upper: u32,
    /// The lower bound proved by the mapping-torus construction.
    pub coformal_lower: u32,
    /// The coformal lower-bound cell as printed in the table, `(c−1)(n−1)`.
    pub coformal_lower_printed: u32,
    /// The coformal upper-bound cell as printed in the table, `(c−1)n`.
    pub coformal_upper_printed: u32,
    /// Conjectured `3nc` for general `c`-step nilpotent targets.
    pub conjecture: u32,
}

pub fn table_cells(n: u32, c: u32) -> TableCells {
    assert!(n >= 1 && c >= 1);
    TableCells {
        simply_connected_upper: 2 * n,
        simply_connected_lower: 2 * (n - 1),
        simple_upper: 2 * n + 1,
        nilpotent_upper: (4 * c - 1) * n,
        coformal_upper: (c + 1) * n,
        coformal_lower: (c + 1) * (n - 1),
        coformal_lower_printed: (c - 1) * (n - 1),
        coformal_upper_printed: (c - 1) * n,
        conjecture: 3 * n * c,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentRow {
    pub n: u32,
    pub upper: u32,
    pub upper_source: &'static str,
    pub lower: Option<u32>,
    pub lower_source: Option<&'static str>,
    /// Table-print alternatives for coformal targets, flagged in reports.
    pub lower_printed: Option<u32>,
    pub upper_printed: Option<u32>,
    /// `3nc`, unproved.
    pub conjecture: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentReport {
    pub classification: Classification,
    pub rows: Vec<ExponentRow>,
}

impl ExponentReport {
    pub fn new(classification: Classification, ns: impl IntoIterator<Item = u32>) -> Self {
        let Classification {
            simply_connected,
            class: c,
            coformal,
        } = classification;
        let rows = ns
            .into_iter()
            .map(|n| {
                let t = table_cells(n, c);
                let mut upper = vec![("c-step nilpotent", t.nilpotent_upper)];
                if simply_connected {
                    upper.push(("simply connected", t.simply_connected_upper));
                } else if c == 1 {
                    upper.push(("simple", t.simple_upper));
                }
                if coformal {
                    upper.push(("coformal", t.coformal_upper));
                }
                // earlier entries win ties, so list the sharper classes first
                upper.reverse();
                let (upper_source, upper) = upper.into_iter().min_by_key(|(_, e)| *e).unwrap();
                let (lower_source, lower) = if simply_connected {
                    (Some("simply connected"), Some(t.simply_connected_lower))
                } else if coformal {
                    (Some("coformal"), Some(t.coformal_lower))
                } else {
                    (None, None)
                };
                let printed = coformal && !simply_connected;
                ExponentRow {
                    n,
                    upper,
                    upper_source,
                    lower,
                    lower_source,
                    lower_printed: printed.then_some(t.coformal_lower_printed),
                    upper_printed: printed.then_some(t.coformal_upper_printed),
                    conjecture: t.conjecture,
                }
            })
            .collect();
        Self {
            classification,
            rows,
        }
    }
}

impl MinimalModel {
    pub fn classification(&self) -> Option<Classification> {
        Classification::of(self)
    }

    pub fn exponent_report(&self, ns: impl IntoIterator<Item = u32>) -> Option<ExponentReport> {
        Some(ExponentReport::new(self.classification()?, ns))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(sc: bool, c: u32, coformal: bool) -> Classification {
        Classification {
            simply_connected: sc,
            class: c,
            coformal,
        }
    }

    #[test]
    fn simply_connected_row() {
        let r = ExponentReport::new(class(true, 1, false), [3]);
        assert_eq!((r.rows[0].upper, r.rows[0].lower), (6, Some(4)));
    }

    #[test]
    fn coformal_two_step_row() {
        let r = ExponentReport::new(class(false, 2, true), [3]);
        let row = &r.rows[0];
        assert_eq!((row.upper, row.lower), (9, Some(6)));
        assert_eq!(row.upper_source, "coformal");
        assert_eq!(row.lower_printed, Some(2));
        assert_eq!(row.upper_printed, Some(3));
    }

    #[test]
    fn general_two_step_row() {
        let r = ExponentReport::new(class(false, 2, false), [3]);
        let row = &r.rows[0];
        assert_eq!((row.upper, row.lower, row.conjecture), (21, None, 18));
    }

    #[test]
    fn simple_row() {
        let r = ExponentReport::new(class(false, 1, false), [4]);
        assert_eq!((r.rows[0].upper, r.rows[0].upper_source), (9, "simple"));
    }

    #[test]
    fn labels() {
        assert_eq!(class(false, 2, true).label(), "2-step nilpotent, coformal");
        assert_eq!(class(true, 1, false).label(), "simply connected");
    }
}
