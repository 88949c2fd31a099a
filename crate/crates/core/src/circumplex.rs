//! The ten motivational value types, their 56 single values, and the
//! circular arrangement used to expand a selected type into a candidate list.
//!
//! Types sit on nine wedges around the circle. Conformity and Tradition
//! share a wedge; every other type owns one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Number of wedges on the circular continuum.
pub const WEDGE_COUNT: u8 = 9;

/// Number of single values in the catalog.
pub const SINGLE_VALUE_COUNT: usize = 56;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircumplexError {
    #[error("unknown single value `{0}`")]
    UnknownSingleValue(String),
    #[error("unknown value type `{0}`")]
    UnknownValueType(String),
}

/// One of the ten motivational value types.
///
/// Declaration order is wedge order, so the derived `Ord` sorts types
/// around the circle starting at Power.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ValueType {
    Power,
    Achievement,
    Hedonism,
    Stimulation,
    SelfDirection,
    Universalism,
    Benevolence,
    Conformity,
    Tradition,
    Security,
}

impl ValueType {
    pub const ALL: [ValueType; 10] = [
        ValueType::Power,
        ValueType::Achievement,
        ValueType::Hedonism,
        ValueType::Stimulation,
        ValueType::SelfDirection,
        ValueType::Universalism,
        ValueType::Benevolence,
        ValueType::Conformity,
        ValueType::Tradition,
        ValueType::Security,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ValueType::Power => "Power",
            ValueType::Achievement => "Achievement",
            ValueType::Hedonism => "Hedonism",
            ValueType::Stimulation => "Stimulation",
            ValueType::SelfDirection => "Self-direction",
            ValueType::Universalism => "Universalism",
            ValueType::Benevolence => "Benevolence",
            ValueType::Conformity => "Conformity",
            ValueType::Tradition => "Tradition",
            ValueType::Security => "Security",
        }
    }

    /// Case- and whitespace-insensitive lookup by display name.
    pub fn from_name(name: &str) -> Result<ValueType, CircumplexError> {
        ValueType::ALL
            .into_iter()
            .find(|t| names_match(t.name(), name))
            .ok_or_else(|| CircumplexError::UnknownValueType(String::from(name)))
    }

    pub fn wedge(self) -> Wedge {
        let index = match self {
            ValueType::Power => 0,
            ValueType::Achievement => 1,
            ValueType::Hedonism => 2,
            ValueType::Stimulation => 3,
            ValueType::SelfDirection => 4,
            ValueType::Universalism => 5,
            ValueType::Benevolence => 6,
            ValueType::Conformity | ValueType::Tradition => 7,
            ValueType::Security => 8,
        };
        Wedge(index)
    }

    /// The wedges on either side of this type, counter-clockwise first.
    pub fn adjacent_wedges(self) -> (Wedge, Wedge) {
        let own = self.wedge();
        (own.previous(), own.next())
    }

    /// Value types on the two neighbouring wedges, in wedge order.
    pub fn adjacent_types(self) -> Vec<ValueType> {
        let (left, right) = self.adjacent_wedges();
        left.types().iter().chain(right.types()).copied().collect()
    }

    /// Member single values in catalog order.
    pub fn members(self) -> impl Iterator<Item = SingleValue> {
        SingleValue::all().filter(move |v| v.value_type() == self)
    }

    /// Singles of this type's wedge and both neighbouring wedges, in
    /// catalog order. For Conformity or Tradition the own wedge contributes
    /// the members of both types.
    pub fn candidate_single_values(self) -> Vec<SingleValue> {
        let own = self.wedge();
        let (left, right) = self.adjacent_wedges();
        SingleValue::all()
            .filter(|v| {
                let w = v.value_type().wedge();
                w == own || w == left || w == right
            })
            .collect()
    }
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ValueType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ValueType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = <alloc::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        ValueType::from_name(&name).map_err(serde::de::Error::custom)
    }
}

/// An angular region of the circle holding one or two value types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wedge(u8);

impl Wedge {
    pub fn new(index: u8) -> Option<Wedge> {
        (index < WEDGE_COUNT).then_some(Wedge(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn next(self) -> Wedge {
        Wedge((self.0 + 1) % WEDGE_COUNT)
    }

    pub fn previous(self) -> Wedge {
        Wedge((self.0 + WEDGE_COUNT - 1) % WEDGE_COUNT)
    }

    pub fn types(self) -> &'static [ValueType] {
        const WEDGES: [&[ValueType]; WEDGE_COUNT as usize] = [
            &[ValueType::Power],
            &[ValueType::Achievement],
            &[ValueType::Hedonism],
            &[ValueType::Stimulation],
            &[ValueType::SelfDirection],
            &[ValueType::Universalism],
            &[ValueType::Benevolence],
            &[ValueType::Conformity, ValueType::Tradition],
            &[ValueType::Security],
        ];
        WEDGES[self.0 as usize]
    }
}

/// Catalog row for one single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingleValueInfo {
    pub name: &'static str,
    pub original_description: &'static str,
    pub additional_explanation: &'static str,
    pub value_type: ValueType,
}

/// One of the 56 single values, identified by its catalog position.
///
/// Catalog order groups values by type in wedge order, so comparing two
/// `SingleValue`s compares catalog order. Serialized as the canonical name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SingleValue(u8);

impl SingleValue {
    pub fn from_index(index: usize) -> Option<SingleValue> {
        (index < SINGLE_VALUE_COUNT).then_some(SingleValue(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = SingleValue> + Clone {
        (0..SINGLE_VALUE_COUNT as u8).map(SingleValue)
    }

    pub fn info(self) -> &'static SingleValueInfo {
        &CATALOG[self.0 as usize]
    }

    pub fn name(self) -> &'static str {
        self.info().name
    }

    pub fn value_type(self) -> ValueType {
        self.info().value_type
    }

    /// Resolves free text to a canonical single value. Matching ignores
    /// ASCII case and collapses runs of whitespace; nothing fuzzier.
    pub fn canonicalize(name: &str) -> Result<SingleValue, CircumplexError> {
        SingleValue::all()
            .find(|v| names_match(v.name(), name))
            .ok_or_else(|| CircumplexError::UnknownSingleValue(String::from(name)))
    }
}

impl fmt::Display for SingleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for SingleValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for SingleValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = <alloc::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        SingleValue::canonicalize(&name).map_err(serde::de::Error::custom)
    }
}

/// Owning value type of a single value given by name.
pub fn value_type_of(name: &str) -> Result<ValueType, CircumplexError> {
    SingleValue::canonicalize(name).map(SingleValue::value_type)
}

fn names_match(canonical: &str, candidate: &str) -> bool {
    let mut a = canonical.split_whitespace();
    let mut b = candidate.split_whitespace();
    loop {
        match (a.next(), b.next()) {
            (None, None) => return true,
            (Some(x), Some(y)) if x.eq_ignore_ascii_case(y) => {}
            _ => return false,
        }
    }
}

const fn entry(
    value_type: ValueType,
    name: &'static str,
    original_description: &'static str,
    additional_explanation: &'static str,
) -> SingleValueInfo {
    SingleValueInfo {
        name,
        original_description,
        additional_explanation,
        value_type,
    }
}

static CATALOG: [SingleValueInfo; SINGLE_VALUE_COUNT] = [
    entry(
        ValueType::Power,
        "Social power",
        "control over others, dominance",
        "Feeling dominant or superior over others",
    ),
    entry(
        ValueType::Power,
        "Wealth",
        "material possessions, money",
        "Feeling materially and financially fulfilled",
    ),
    entry(
        ValueType::Power,
        "Authority",
        "the right to lead or command",
        "Feeling a sense of leadership",
    ),
    entry(
        ValueType::Power,
        "Preserving my public image",
        "protecting my face",
        "Being able to maintain one's face or reputation",
    ),
    entry(
        ValueType::Power,
        "Social recognition",
        "respect, approval by others",
        "Feeling respected and recognized by others",
    ),
    entry(
        ValueType::Achievement,
        "Influential",
        "having an impact on people and events",
        "Being able to influence people or events",
    ),
    entry(
        ValueType::Achievement,
        "Ambitious",
        "hardworking, aspiring",
        "Striving to improve oneself",
    ),
    entry(
        ValueType::Achievement,
        "Successful",
        "achieving goals",
        "Feeling a sense of achievement",
    ),
    entry(
        ValueType::Achievement,
        "Capable",
        "competent, effective, efficient",
        "Becoming effective and efficient",
    ),
    entry(
        ValueType::Achievement,
        "Intelligent",
        "logical, thinking",
        "Leading to logical thinking",
    ),
    entry(
        ValueType::Hedonism,
        "Pleasure",
        "gratification of desires",
        "Feeling the joy of having desires fulfilled",
    ),
    entry(
        ValueType::Hedonism,
        "Enjoying life",
        "enjoying food, sex, leisure, etc.",
        "Gaining enjoyment from life",
    ),
    entry(
        ValueType::Stimulation,
        "Exciting life",
        "stimulating experiences",
        "Experiencing exciting activities",
    ),
    entry(
        ValueType::Stimulation,
        "Varied life",
        "filled with challenge, novelty and change",
        "Feeling change and novelty",
    ),
    entry(
        ValueType::Stimulation,
        "Daring",
        "seeking adventure, risk",
        "Encouraging adventure and risk-taking",
    ),
    entry(
        ValueType::SelfDirection,
        "Self Respect",
        "belief in one’s own worth",
        "Being able to be oneself",
    ),
    entry(
        ValueType::SelfDirection,
        "Choosing own goals",
        "selecting own purposes",
        "Leading to the selection of one's own goals",
    ),
    entry(
        ValueType::SelfDirection,
        "Creativity",
        "uniqueness, imagination",
        "Feeling unique and creative",
    ),
    entry(
        ValueType::SelfDirection,
        "Curious",
        "interested in everything, exploring",
        "Stimulating curiosity and exploration",
    ),
    entry(
        ValueType::SelfDirection,
        "Freedom",
        "freedom of action and thought",
        "Feeling free to act and think",
    ),
    entry(
        ValueType::SelfDirection,
        "Independent",
        "self-reliant, self-sufficient",
        "Being self-sufficient and not relying on others",
    ),
    entry(
        ValueType::Universalism,
        "Wisdom",
        "a mature understanding of life",
        "Gaining a deep understanding of life",
    ),
    entry(
        ValueType::Universalism,
        "World of beauty",
        "beauty of nature and the arts",
        "Appreciating the beauty of nature and the arts",
    ),
    entry(
        ValueType::Universalism,
        "Unity with nature",
        "fitting into nature",
        "Feeling at one with nature",
    ),
    entry(
        ValueType::Universalism,
        "Broad minded",
        "tolerant of different ideas and beliefs",
        "Becoming tolerant of different ideas and beliefs",
    ),
    entry(
        ValueType::Universalism,
        "Protecting the environment",
        "preserving nature",
        "Contributing to environmental preservation",
    ),
    entry(
        ValueType::Universalism,
        "Equality",
        "equal opportunity for all",
        "Providing equal opportunities for all",
    ),
    entry(
        ValueType::Universalism,
        "World at peace",
        "free of war and conflict",
        "Bringing world peace",
    ),
    entry(
        ValueType::Universalism,
        "Social justice",
        "correcting injustice, care for the weak",
        "Contributing to correcting injustice and protecting the weak",
    ),
    entry(
        ValueType::Universalism,
        "Inner harmony",
        "at peace with myself",
        "Feeling inner peace",
    ),
    entry(
        ValueType::Benevolence,
        "True friendship",
        "close, supportive friends",
        "Feeling closeness like friendship",
    ),
    entry(
        ValueType::Benevolence,
        "Mature love",
        "deep emotional and spiritual intimacy",
        "Feeling affection and love",
    ),
    entry(
        ValueType::Benevolence,
        "Meaning in life",
        "a purpose in life",
        "Feeling a sense of purpose in life",
    ),
    entry(
        ValueType::Benevolence,
        "Responsible",
        "dependable, reliable",
        "Feeling dependable",
    ),
    entry(
        ValueType::Benevolence,
        "Helpful",
        "working for the welfare of others",
        "Being able to help others",
    ),
    entry(
        ValueType::Benevolence,
        "Honest",
        "genuine, sincere",
        "Feeling honest and sincere",
    ),
    entry(
        ValueType::Benevolence,
        "Forgiving",
        "willing to pardon others",
        "Feeling forgiving",
    ),
    entry(
        ValueType::Benevolence,
        "Spiritual life",
        "emphasis on spiritual not material matters",
        "Focusing on spiritual rather than material fulfillment",
    ),
    entry(
        ValueType::Benevolence,
        "Loyal",
        "faithful to my friends, group",
        "Being loyal to friends and groups",
    ),
    entry(
        ValueType::Conformity,
        "Politeness",
        "courtesy, good manners",
        "Being polite and having good manners",
    ),
    entry(
        ValueType::Conformity,
        "Honoring of parents and elders",
        "showing respect",
        "Showing respect to parents and elders",
    ),
    entry(
        ValueType::Conformity,
        "Self discipline",
        "self-restraint, resistance to temptation",
        "Maintaining self-discipline and resisting temptation",
    ),
    entry(
        ValueType::Conformity,
        "Obedient",
        "dutiful, meeting obligations",
        "Being dutiful and fulfilling obligations",
    ),
    entry(
        ValueType::Tradition,
        "Respect for tradition",
        "preservation of time-honored customs",
        "Contributing to the preservation of tradition",
    ),
    entry(
        ValueType::Tradition,
        "Devout",
        "holding to religious faith and belief",
        "Maintaining religious faith",
    ),
    entry(
        ValueType::Tradition,
        "Detachment",
        "from worldly concerns",
        "Gaining detachment from worldly concerns",
    ),
    entry(
        ValueType::Tradition,
        "Humble",
        "modest, self-effacing",
        "Feeling humility and modesty",
    ),
    entry(
        ValueType::Tradition,
        "Moderate",
        "avoiding extremes of feeling and action",
        "Feeling balanced without extremes in emotion or action",
    ),
    entry(
        ValueType::Tradition,
        "Accepting portion in life",
        "submitting to life’s circumstances",
        "Being able to adapt and accept life’s circumstances",
    ),
    entry(
        ValueType::Security,
        "Healthy",
        "not being sick physically or mentally",
        "Promoting physical and mental health",
    ),
    entry(
        ValueType::Security,
        "Sense of belonging",
        "feelings that others care about me",
        "Feeling a sense of belonging and care from others",
    ),
    entry(
        ValueType::Security,
        "National security",
        "protection of my nation from enemies",
        "Contributing to national security",
    ),
    entry(
        ValueType::Security,
        "Social order",
        "stability of society",
        "Contributing to social stability and order",
    ),
    entry(
        ValueType::Security,
        "Family security",
        "safety for loved ones",
        "Contributing to the safety of loved ones",
    ),
    entry(
        ValueType::Security,
        "Reciprocation of favor",
        "avoidance of indebtedness",
        "Feeling reciprocal and mutually beneficial",
    ),
    entry(
        ValueType::Security,
        "Clean",
        "neat, tidy",
        "Feeling cleanliness and neatness, maintaining cleanliness",
    ),
];
