// Raw workshop records, transcribed by hand and kept apart from the
// bundle so tests can check the bundle against them. Names keep the
// casing of the source tables.

pub const CATALOG: &[(&str, &str)] = &[
    ("Power", "Social power"),
    ("Power", "Wealth"),
    ("Power", "Authority"),
    ("Power", "Preserving my public image"),
    ("Power", "Social recognition"),
    ("Achievement", "Influential"),
    ("Achievement", "Ambitious"),
    ("Achievement", "Successful"),
    ("Achievement", "Capable"),
    ("Achievement", "Intelligent"),
    ("Hedonism", "Pleasure"),
    ("Hedonism", "Enjoying life"),
    ("Stimulation", "Exciting life"),
    ("Stimulation", "Varied life"),
    ("Stimulation", "Daring"),
    ("Self-direction", "Self Respect"),
    ("Self-direction", "Choosing own goals"),
    ("Self-direction", "Creativity"),
    ("Self-direction", "Curious"),
    ("Self-direction", "Freedom"),
    ("Self-direction", "Independent"),
    ("Universalism", "Wisdom"),
    ("Universalism", "World of beauty"),
    ("Universalism", "Unity with nature"),
    ("Universalism", "Broad minded"),
    ("Universalism", "Protecting the environment"),
    ("Universalism", "Equality"),
    ("Universalism", "World at peace"),
    ("Universalism", "Social justice"),
    ("Universalism", "Inner harmony"),
    ("Benevolence", "True friendship"),
    ("Benevolence", "Mature love"),
    ("Benevolence", "Meaning in life"),
    ("Benevolence", "Responsible"),
    ("Benevolence", "Helpful"),
    ("Benevolence", "Honest"),
    ("Benevolence", "Forgiving"),
    ("Benevolence", "Spiritual life"),
    ("Benevolence", "Loyal"),
    ("Conformity", "Politeness"),
    ("Conformity", "Honoring of parents and elders"),
    ("Conformity", "Self discipline"),
    ("Conformity", "Obedient"),
    ("Tradition", "Respect for tradition"),
    ("Tradition", "Devout"),
    ("Tradition", "Detachment"),
    ("Tradition", "Humble"),
    ("Tradition", "Moderate"),
    ("Tradition", "Accepting portion in life"),
    ("Security", "Healthy"),
    ("Security", "Sense of belonging"),
    ("Security", "National security"),
    ("Security", "Social order"),
    ("Security", "Family security"),
    ("Security", "Reciprocation of favor"),
    ("Security", "Clean"),
];

pub struct Ident {
    pub function: &'static str,
    pub group: &'static str,
    pub selected: &'static str,
    pub related: &'static [&'static str],
    pub irrelevant: &'static [&'static str],
}

pub const IDENT: &[Ident] = &[
    Ident {
        function: "Omoiiro-1",
        group: "general_consumers",
        selected: "Universalism",
        related: &[
            "Curious",
            "Wisdom",
            "Unity with nature",
            "Broad minded",
            "Equality",
            "World of beauty",
            "Helpful",
            "Spiritual life",
        ],
        irrelevant: &[
            "Self Respect",
            "True friendship",
            "Mature love",
            "Independent",
            "Honest",
            "Meaning in life",
            "Responsible",
            "Choosing own goals",
            "Forgiving",
            "Loyal",
            "Inner harmony",
            "Freedom",
            "Protecting the environment",
            "Social justice",
            "Creativity",
            "World at peace",
        ],
    },
    Ident {
        function: "Omoiiro-1",
        group: "technology_deployment",
        selected: "Universalism",
        related: &[
            "Self Respect",
            "Creativity",
            "Curious",
            "Freedom",
            "World of beauty",
            "Unity with nature",
            "Broad minded",
            "Equality",
            "Inner harmony",
            "True friendship",
            "Mature love",
            "Helpful",
            "Spiritual life",
        ],
        irrelevant: &[
            "Choosing own goals",
            "Independent",
            "Wisdom",
            "Protecting the environment",
            "World at peace",
            "Social justice",
            "Meaning in life",
            "Responsible",
            "Honest",
            "Forgiving",
            "Loyal",
        ],
    },
    Ident {
        function: "Omoiiro-2",
        group: "general_consumers",
        selected: "Hedonism",
        related: &[
            "Influential",
            "Ambitious",
            "Capable",
            "Enjoying life",
            "Exciting life",
            "Varied life",
        ],
        irrelevant: &["Successful", "Pleasure", "Daring", "Intelligent"],
    },
    Ident {
        function: "Omoiiro-2",
        group: "technology_deployment",
        selected: "Stimulation",
        related: &[
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Creativity",
            "Curious",
            "Freedom",
            "Self Respect",
            "Choosing own goals",
            "Independent",
        ],
        irrelevant: &["Daring"],
    },
    Ident {
        function: "Continuator-1",
        group: "general_consumers",
        selected: "Hedonism",
        related: &[
            "Influential",
            "Ambitious",
            "Successful",
            "Capable",
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Daring",
        ],
        irrelevant: &["Intelligent"],
    },
    Ident {
        function: "Continuator-1",
        group: "technology_deployment",
        selected: "Stimulation",
        related: &[
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Self Respect",
            "Choosing own goals",
            "Creativity",
            "Curious",
            "Freedom",
            "Independent",
        ],
        irrelevant: &["Daring"],
    },
    Ident {
        function: "Continuator-2",
        group: "general_consumers",
        selected: "Hedonism",
        related: &[
            "Influential",
            "Ambitious",
            "Successful",
            "Capable",
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Daring",
        ],
        irrelevant: &["Intelligent"],
    },
    Ident {
        function: "Continuator-2",
        group: "technology_deployment",
        selected: "Stimulation",
        related: &[
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Daring",
            "Self Respect",
            "Creativity",
            "Curious",
            "Independent",
        ],
        irrelevant: &["Choosing own goals", "Freedom"],
    },
    Ident {
        function: "Cybercode-1",
        group: "general_consumers",
        selected: "Stimulation",
        related: &[
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Daring",
            "Choosing own goals",
            "Creativity",
            "Curious",
            "Freedom",
        ],
        irrelevant: &["Self Respect", "Independent"],
    },
    Ident {
        function: "Cybercode-1",
        group: "technology_deployment",
        selected: "Stimulation",
        related: &[
            "Pleasure",
            "Enjoying life",
            "Exciting life",
            "Varied life",
            "Daring",
            "Curious",
            "Freedom",
        ],
        irrelevant: &["Self Respect", "Choosing own goals", "Creativity"],
    },
    Ident {
        function: "Bubble Click-1",
        group: "general_consumers",
        selected: "Hedonism",
        related: &[
            "Influential",
            "Successful",
            "Pleasure",
            "Enjoying life",
            "Exciting life",
        ],
        irrelevant: &[
            "Ambitious",
            "Capable",
            "Intelligent",
            "Varied life",
            "Daring",
        ],
    },
    Ident {
        function: "Bubble Click-1",
        group: "technology_deployment",
        selected: "Achievement",
        related: &[
            "Social recognition",
            "Influential",
            "Successful",
            "Capable",
            "Enjoying life",
        ],
        irrelevant: &[
            "Intelligent",
            "Social power",
            "Wealth",
            "Preserving my public image",
            "Authority",
            "Pleasure",
            "Ambitious",
        ],
    },
];

/// (function, group, single value, market score)
pub const SCORES: &[(&str, &str, &str, u8)] = &[
    ("Omoiiro-1", "general_consumers", "Curious", 5),
    ("Omoiiro-1", "general_consumers", "Wisdom", 2),
    ("Omoiiro-1", "general_consumers", "Unity with nature", 3),
    ("Omoiiro-1", "general_consumers", "Broad minded", 5),
    ("Omoiiro-1", "general_consumers", "Equality", 6),
    ("Omoiiro-1", "general_consumers", "World of beauty", 7),
    ("Omoiiro-1", "general_consumers", "Helpful", 2),
    ("Omoiiro-1", "general_consumers", "Spiritual life", 0),
    ("Omoiiro-2", "general_consumers", "Ambitious", 3),
    ("Omoiiro-2", "general_consumers", "Capable", 4),
    ("Omoiiro-2", "general_consumers", "Enjoying life", 6),
    ("Omoiiro-2", "general_consumers", "Exciting life", 7),
    ("Omoiiro-2", "general_consumers", "Varied life", 6),
    ("Continuator-1", "general_consumers", "Influential", 0),
    ("Continuator-1", "general_consumers", "Ambitious", 4),
    ("Continuator-1", "general_consumers", "Successful", 7),
    ("Continuator-1", "general_consumers", "Capable", 6),
    ("Continuator-1", "general_consumers", "Pleasure", 6),
    ("Continuator-1", "general_consumers", "Enjoying life", 2),
    ("Continuator-1", "general_consumers", "Exciting life", 6),
    ("Continuator-1", "general_consumers", "Varied life", 5),
    ("Continuator-1", "general_consumers", "Daring", 4),
    ("Continuator-2", "general_consumers", "Influential", 0),
    ("Continuator-2", "general_consumers", "Ambitious", 4),
    ("Continuator-2", "general_consumers", "Successful", 3),
    ("Continuator-2", "general_consumers", "Capable", 2),
    ("Continuator-2", "general_consumers", "Pleasure", 7),
    ("Continuator-2", "general_consumers", "Enjoying life", 7),
    ("Continuator-2", "general_consumers", "Exciting life", 5),
    ("Continuator-2", "general_consumers", "Varied life", 4),
    ("Continuator-2", "general_consumers", "Daring", 6),
    ("Cybercode-1", "general_consumers", "Pleasure", 0),
    ("Cybercode-1", "general_consumers", "Enjoying life", 4),
    ("Cybercode-1", "general_consumers", "Exciting life", 3),
    ("Cybercode-1", "general_consumers", "Varied life", 2),
    ("Cybercode-1", "general_consumers", "Daring", 7),
    ("Cybercode-1", "general_consumers", "Choosing own goals", 7),
    ("Cybercode-1", "general_consumers", "Creativity", 5),
    ("Cybercode-1", "general_consumers", "Curious", 4),
    ("Cybercode-1", "general_consumers", "Freedom", 6),
    ("Bubble Click-1", "general_consumers", "Influential", 7),
    ("Bubble Click-1", "general_consumers", "Successful", 5),
    ("Bubble Click-1", "general_consumers", "Pleasure", 5),
    ("Bubble Click-1", "general_consumers", "Enjoying life", 0),
    ("Bubble Click-1", "general_consumers", "Exciting life", 3),
    ("Omoiiro-1", "technology_deployment", "Self Respect", 3),
    ("Omoiiro-1", "technology_deployment", "Creativity", 5),
    ("Omoiiro-1", "technology_deployment", "Curious", 2),
    ("Omoiiro-1", "technology_deployment", "Freedom", 0),
    ("Omoiiro-1", "technology_deployment", "World of beauty", 4),
    ("Omoiiro-1", "technology_deployment", "Unity with nature", 4),
    ("Omoiiro-1", "technology_deployment", "Broad minded", 6),
    ("Omoiiro-1", "technology_deployment", "Equality", 7),
    ("Omoiiro-1", "technology_deployment", "Inner harmony", 3),
    ("Omoiiro-1", "technology_deployment", "True friendship", 4),
    ("Omoiiro-1", "technology_deployment", "Mature love", 7),
    ("Omoiiro-1", "technology_deployment", "Helpful", 5),
    ("Omoiiro-1", "technology_deployment", "Spiritual life", 6),
    ("Omoiiro-2", "technology_deployment", "Pleasure", 6),
    ("Omoiiro-2", "technology_deployment", "Enjoying life", 5),
    ("Omoiiro-2", "technology_deployment", "Exciting life", 5),
    ("Omoiiro-2", "technology_deployment", "Varied life", 7),
    ("Omoiiro-2", "technology_deployment", "Creativity", 4),
    ("Omoiiro-2", "technology_deployment", "Curious", 5),
    ("Omoiiro-2", "technology_deployment", "Freedom", 0),
    ("Omoiiro-2", "technology_deployment", "Self Respect", 2),
    (
        "Omoiiro-2",
        "technology_deployment",
        "Choosing own goals",
        0,
    ),
    ("Omoiiro-2", "technology_deployment", "Independent", 2),
    ("Continuator-1", "technology_deployment", "Pleasure", 5),
    ("Continuator-1", "technology_deployment", "Enjoying life", 5),
    ("Continuator-1", "technology_deployment", "Exciting life", 7),
    ("Continuator-1", "technology_deployment", "Varied life", 7),
    ("Continuator-1", "technology_deployment", "Self Respect", 4),
    (
        "Continuator-1",
        "technology_deployment",
        "Choosing own goals",
        4,
    ),
    ("Continuator-1", "technology_deployment", "Creativity", 6),
    ("Continuator-1", "technology_deployment", "Curious", 6),
    ("Continuator-1", "technology_deployment", "Freedom", 0),
    ("Continuator-1", "technology_deployment", "Independent", 3),
    ("Continuator-2", "technology_deployment", "Pleasure", 3),
    ("Continuator-2", "technology_deployment", "Enjoying life", 2),
    ("Continuator-2", "technology_deployment", "Exciting life", 6),
    ("Continuator-2", "technology_deployment", "Varied life", 4),
    ("Continuator-2", "technology_deployment", "Daring", 6),
    ("Continuator-2", "technology_deployment", "Self Respect", 0),
    ("Continuator-2", "technology_deployment", "Creativity", 6),
    ("Continuator-2", "technology_deployment", "Curious", 4),
    ("Continuator-2", "technology_deployment", "Independent", 7),
    ("Cybercode-1", "technology_deployment", "Pleasure", 5),
    ("Cybercode-1", "technology_deployment", "Enjoying life", 7),
    ("Cybercode-1", "technology_deployment", "Exciting life", 5),
    ("Cybercode-1", "technology_deployment", "Varied life", 3),
    ("Cybercode-1", "technology_deployment", "Daring", 5),
    ("Cybercode-1", "technology_deployment", "Curious", 3),
    ("Cybercode-1", "technology_deployment", "Freedom", 0),
    (
        "Bubble Click-1",
        "technology_deployment",
        "Social recognition",
        5,
    ),
    ("Bubble Click-1", "technology_deployment", "Influential", 6),
    ("Bubble Click-1", "technology_deployment", "Successful", 7),
    ("Bubble Click-1", "technology_deployment", "Capable", 5),
    (
        "Bubble Click-1",
        "technology_deployment",
        "Enjoying life",
        0,
    ),
];

/// (function, group, single value, TRL)
pub const TRLS: &[(&str, &str, &str, u8)] = &[
    ("Omoiiro-1", "general_consumers", "Curious", 6),
    ("Omoiiro-1", "general_consumers", "Broad minded", 6),
    ("Omoiiro-1", "general_consumers", "Equality", 1),
    ("Omoiiro-1", "general_consumers", "World of beauty", 6),
    ("Omoiiro-2", "general_consumers", "Enjoying life", 6),
    ("Omoiiro-2", "general_consumers", "Exciting life", 1),
    ("Omoiiro-2", "general_consumers", "Varied life", 1),
    ("Continuator-1", "general_consumers", "Successful", 6),
    ("Continuator-1", "general_consumers", "Capable", 6),
    ("Continuator-1", "general_consumers", "Pleasure", 6),
    ("Continuator-1", "general_consumers", "Exciting life", 6),
    ("Continuator-1", "general_consumers", "Varied life", 6),
    ("Continuator-2", "general_consumers", "Pleasure", 6),
    ("Continuator-2", "general_consumers", "Enjoying life", 6),
    ("Continuator-2", "general_consumers", "Exciting life", 6),
    ("Continuator-2", "general_consumers", "Daring", 6),
    ("Cybercode-1", "general_consumers", "Daring", 9),
    ("Cybercode-1", "general_consumers", "Choosing own goals", 9),
    ("Cybercode-1", "general_consumers", "Creativity", 9),
    ("Cybercode-1", "general_consumers", "Freedom", 9),
    ("Bubble Click-1", "general_consumers", "Influential", 3),
    ("Bubble Click-1", "general_consumers", "Successful", 3),
    ("Bubble Click-1", "general_consumers", "Pleasure", 4),
    ("Omoiiro-1", "technology_deployment", "Creativity", 9),
    ("Omoiiro-1", "technology_deployment", "Broad minded", 9),
    ("Omoiiro-1", "technology_deployment", "Equality", 6),
    ("Omoiiro-1", "technology_deployment", "Mature love", 6),
    ("Omoiiro-1", "technology_deployment", "Helpful", 9),
    ("Omoiiro-1", "technology_deployment", "Spiritual life", 6),
    ("Omoiiro-2", "technology_deployment", "Pleasure", 9),
    ("Omoiiro-2", "technology_deployment", "Enjoying life", 9),
    ("Omoiiro-2", "technology_deployment", "Exciting life", 9),
    ("Omoiiro-2", "technology_deployment", "Varied life", 9),
    ("Omoiiro-2", "technology_deployment", "Curious", 9),
    ("Continuator-1", "technology_deployment", "Pleasure", 6),
    ("Continuator-1", "technology_deployment", "Enjoying life", 6),
    ("Continuator-1", "technology_deployment", "Exciting life", 6),
    ("Continuator-1", "technology_deployment", "Varied life", 6),
    ("Continuator-1", "technology_deployment", "Creativity", 3),
    ("Continuator-1", "technology_deployment", "Curious", 6),
    ("Continuator-2", "technology_deployment", "Exciting life", 6),
    ("Continuator-2", "technology_deployment", "Daring", 6),
    ("Continuator-2", "technology_deployment", "Creativity", 4),
    ("Continuator-2", "technology_deployment", "Independent", 4),
    ("Cybercode-1", "technology_deployment", "Pleasure", 9),
    ("Cybercode-1", "technology_deployment", "Enjoying life", 8),
    ("Cybercode-1", "technology_deployment", "Exciting life", 9),
    ("Cybercode-1", "technology_deployment", "Daring", 9),
    (
        "Bubble Click-1",
        "technology_deployment",
        "Social recognition",
        5,
    ),
    ("Bubble Click-1", "technology_deployment", "Influential", 2),
    ("Bubble Click-1", "technology_deployment", "Successful", 4),
    ("Bubble Click-1", "technology_deployment", "Capable", 1),
];
