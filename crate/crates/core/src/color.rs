use std::fmt;
use std::sync::Arc;

/// Vertex / letter colour. The empty name is the default colour and prints
/// as nothing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(Arc<str>);

impl Color {
    pub fn new(name: &str) -> Self {
        Color(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_default(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for Color {
    fn default() -> Self {
        Color::new("")
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Color({:?})", &*self.0)
    }
}

/// The finite colour set C used for enumeration and input validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorSet(Vec<Color>);

impl ColorSet {
    pub fn new(mut colors: Vec<Color>) -> Self {
        colors.sort();
        colors.dedup();
        assert!(!colors.is_empty(), "colour set must be nonempty");
        ColorSet(colors)
    }

    /// Parses a comma-separated list of colour names.
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut v = Vec::new();
        for name in spec.split(',') {
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(format!("invalid colour name {name:?}"));
            }
            v.push(Color::new(name));
        }
        Ok(ColorSet::new(v))
    }

    pub fn colors(&self) -> &[Color] {
        &self.0
    }

    pub fn contains(&self, c: &Color) -> bool {
        self.0.contains(c)
    }
}

impl Default for ColorSet {
    fn default() -> Self {
        ColorSet(vec![Color::default()])
    }
}
