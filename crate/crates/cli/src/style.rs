//! Optional ANSI styling of plain output, controlled by `LATTIKA_COLOR`.

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// `LATTIKA_COLOR=1` turns color on; anything else leaves it off.
    pub fn from_env() -> Self {
        Style {
            color: std::env::var("LATTIKA_COLOR").is_ok_and(|v| v.trim() == "1"),
        }
    }

    pub fn key(self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn verdict(self, yes: bool) -> String {
        match (self.color, yes) {
            (false, _) => yes.to_string(),
            (true, true) => "\x1b[32mtrue\x1b[0m".to_string(),
            (true, false) => "\x1b[31mfalse\x1b[0m".to_string(),
        }
    }
}
