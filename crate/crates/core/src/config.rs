//! Engine configuration.
//!
//! A single structured file (TOML or JSON, chosen by extension) holds every
//! tunable named across the crate. All sections and fields have defaults, so
//! a partial file — or none at all — yields a runnable desk-scale setup.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(default)]
pub struct Config {
    /// Master seed. Every random stream in the engine derives from it.
    pub seed: u64,
    pub persona: PersonaConfig,
    pub context: ContextConfig,
    pub memory: MemoryConfig,
    pub retrieval: RetrievalConfig,
    pub agent: AgentConfig,
    pub coordinator: CoordinatorConfig,
    pub arbiter: ArbiterConfig,
    pub learning: LearningConfig,
    pub simulation: SimulationConfig,
}

/// Facet vocabularies plus the persona roster to register at startup.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct PersonaConfig {
    /// Embedding dimension per facet block; total k = 4 * facet_dim.
    pub facet_dim: usize,
    pub roles: Vec<String>,
    pub expertise: Vec<String>,
    pub task_contexts: Vec<String>,
    pub domains: Vec<String>,
    pub personas: Vec<PersonaSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PersonaSpec {
    pub role: String,
    pub expertise: String,
    pub task_context: String,
    pub domain: String,
}

impl Default for PersonaConfig {
    fn default() -> Self {
        let p = |r: &str, e: &str, t: &str, d: &str| PersonaSpec {
            role: r.into(),
            expertise: e.into(),
            task_context: t.into(),
            domain: d.into(),
        };
        Self {
            facet_dim: 8,
            roles: ["synthesizer", "critic", "librarian", "judge"]
                .map(String::from)
                .to_vec(),
            expertise: ["academic-ir", "programming", "health", "news"]
                .map(String::from)
                .to_vec(),
            task_contexts: ["exploratory", "decision", "lookup"]
                .map(String::from)
                .to_vec(),
            domains: ["software", "health", "finance", "travel", "science", "sports"]
                .map(String::from)
                .to_vec(),
            personas: vec![
                p("synthesizer", "academic-ir", "exploratory", "software"),
                p("critic", "programming", "decision", "health"),
                p("librarian", "academic-ir", "lookup", "finance"),
                p("synthesizer", "news", "exploratory", "travel"),
                p("critic", "health", "decision", "science"),
                p("librarian", "programming", "lookup", "sports"),
                p("judge", "academic-ir", "decision", "software"),
            ],
        }
    }
}

/// Context feature map layout. d_phi = lexical_dim + recency_dim + 4
/// (two click scalars, two task scalars).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ContextConfig {
    pub lexical_dim: usize,
    pub recency_dim: usize,
    pub hash_seed: u64,
    /// Half-life, in turns, of the recency-weighted prior-query slice.
    pub recency_half_life: f64,
    pub click_count_cap: f64,
    pub dwell_cap: f64,
    pub turn_cap: f64,
    pub query_len_cap: f64,
}

impl Default for ContextConfig {
    fn default() -> Self {
        Self {
            lexical_dim: 32,
            recency_dim: 28,
            hash_seed: 0x5eed,
            recency_half_life: 4.0,
            click_count_cap: 8.0,
            dwell_cap: 60.0,
            turn_cap: 16.0,
            query_len_cap: 12.0,
        }
    }
}

impl ContextConfig {
    pub fn d_phi(&self) -> usize {
        self.lexical_dim + self.recency_dim + 4
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct MemoryConfig {
    /// Working-memory view cap per session.
    pub w_cap: usize,
    /// Minimum pattern occurrences before promotion to semantic memory.
    pub n_min: u32,
    /// Minimum distinct supporting sessions before promotion.
    pub s_min: u32,
    /// Episodic decay half-life, in interactions (logical time).
    pub half_life: f64,
    /// Episodic records below this weight are purged.
    pub epsilon_purge: f64,
    /// Episodic records older than this many interactions are purged.
    pub retention_limit: u64,
    /// Payload text fields are truncated to this many bytes at write time.
    pub payload_cap: usize,
    /// When false, working reads return the whole uncapped session trace
    /// (the memory-load contrast condition).
    pub separation: bool,
    /// When false, episodic memory is neither read nor retrieved from
    /// (ablation toggle).
    pub episodic_enabled: bool,
    pub redaction: RedactionConfig,
}

impl Default for MemoryConfig {
    fn default() -> Self {
        Self {
            w_cap: 8,
            n_min: 3,
            s_min: 2,
            half_life: 20.0,
            epsilon_purge: 0.05,
            retention_limit: 500,
            payload_cap: 512,
            separation: true,
            episodic_enabled: true,
            redaction: RedactionConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(default, rename_all = "snake_case")]
pub struct RedactionConfig {
    pub kind: RedactionKind,
    /// For `regex` kind: tokens matching this pattern get replaced.
    pub pattern: Option<String>,
    pub replacement: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, Default, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum RedactionKind {
    #[default]
    Identity,
    /// Replaces email-shaped tokens (`a@b.c`) and, if set, `pattern` matches.
    Email,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RetrievalConfig {
    pub k1: f64,
    pub b: f64,
    /// Multiplicative boost for docs whose domain matches the persona's.
    pub domain_boost: f64,
    pub g_max: u8,
    pub top_n: usize,
}

impl Default for RetrievalConfig {
    fn default() -> Self {
        Self { k1: 1.2, b: 0.75, domain_boost: 1.5, g_max: 4, top_n: 10 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct AgentConfig {
    /// Multiplicative boost for memory-sourced docs at rank time.
    pub familiarity_boost: f64,
    /// Per-agent plan budget in tokens.
    pub token_cap: u32,
    /// Max notes the backend emits per reasoning pass.
    pub note_limit: usize,
    /// Tokens kept from a document when building a note claim.
    pub claim_token_limit: usize,
    /// Max memory records consulted per step.
    pub memory_limit: usize,
}

impl Default for AgentConfig {
    fn default() -> Self {
        Self {
            familiarity_boost: 1.2,
            token_cap: 1200,
            note_limit: 8,
            claim_token_limit: 6,
            memory_limit: 5,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct CoordinatorConfig {
    /// Gate-confidence threshold below which debate degrades to independent.
    pub theta: f64,
    /// Difficulty thresholds: D < tau1 independent, < tau2 relay, else debate.
    pub tau1: f64,
    pub tau2: f64,
    pub r_max: u32,
    pub est_tokens_per_agent: u32,
    pub k_max: usize,
    /// Difficulty = w[0]*len_norm + w[1]*intents_norm + w[2]*novelty.
    pub difficulty_weights: [f64; 3],
    pub query_len_cap: f64,
    pub intents_cap: f64,
    /// Token cap on relay query reformulation.
    pub relay_token_cap: usize,
    /// Synthetic latency charged per backend call, keeping protocol latency
    /// ordering machine-independent.
    pub backend_call_delay_ms: u64,
    /// Ablation toggle: when false, select_protocol never picks debate.
    pub debate_enabled: bool,
}

impl Default for CoordinatorConfig {
    fn default() -> Self {
        Self {
            theta: 0.3,
            tau1: 0.4,
            tau2: 0.7,
            r_max: 2,
            est_tokens_per_agent: 1000,
            k_max: 4,
            difficulty_weights: [0.3, 0.3, 0.4],
            query_len_cap: 12.0,
            intents_cap: 4.0,
            relay_token_cap: 32,
            backend_call_delay_ms: 5,
            debate_enabled: true,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct ArbiterConfig {
    pub rrf_k0: f64,
    /// Sentences whose best supporting confidence falls below this are hedged.
    pub hedge_threshold: f64,
    /// Length of the fused list shown to the user.
    pub fused_k: usize,
    /// Diversification candidate pool = factor * fused_k.
    pub diversify_pool_factor: usize,
    /// Apply intent-aware greedy reordering when a query is ambiguous.
    pub diversify: bool,
}

impl Default for ArbiterConfig {
    fn default() -> Self {
        Self {
            rrf_k0: 60.0,
            hedge_threshold: 0.5,
            fused_k: 10,
            diversify_pool_factor: 4,
            diversify: true,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, Default, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum RoutingMode {
    /// Frozen gate matrix; softmax top-k.
    #[default]
    Static,
    LinUcb,
    Thompson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct LearningConfig {
    pub routing: RoutingMode,
    /// LinUCB exploration width.
    pub alpha: f64,
    /// Thompson posterior scale.
    pub sigma: f64,
    /// Forgetting factor applied to (A - I) and b on update; 1.0 disables.
    pub forgetting: f64,
    /// Epsilon-greedy logging rate around the bandit's choice.
    pub epsilon: f64,
    /// Lower bound applied to every logged propensity.
    pub epsilon_floor: f64,
    /// Monte-Carlo resamples for Thompson propensity estimates.
    pub thompson_mc: usize,
    /// Action menu of (persona set, protocol) arms. Empty = derived default:
    /// one independent arm per routable persona, plus full-set relay and
    /// full-set debate arms.
    pub menu: Vec<MenuArm>,
    pub reward: RewardConfig,
}

impl Default for LearningConfig {
    fn default() -> Self {
        Self {
            routing: RoutingMode::Static,
            alpha: 0.5,
            sigma: 0.25,
            forgetting: 1.0,
            epsilon: 0.05,
            epsilon_floor: 0.05,
            thompson_mc: 64,
            menu: Vec::new(),
            reward: RewardConfig::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MenuArm {
    pub personas: Vec<String>,
    pub protocol: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct RewardConfig {
    pub w_click: f64,
    pub w_dwell: f64,
    pub w_success: f64,
    pub w_tokens: f64,
    pub dwell_cap: f64,
    pub token_cap: f64,
}

impl Default for RewardConfig {
    fn default() -> Self {
        Self {
            w_click: 0.3,
            w_dwell: 0.2,
            w_success: 0.5,
            w_tokens: 0.1,
            dwell_cap: 60.0,
            token_cap: 4000.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct SimulationConfig {
    pub max_turns: u32,
    /// A turn succeeds when a qualifying doc appears in the shown top-k.
    pub success_top_k: usize,
    /// Dwell seconds per grade point on a clicked doc.
    pub dwell_per_grade: f64,
    pub budget_tokens: u32,
    pub sessions_per_user: u32,
    pub corpus: CorpusGenConfig,
    pub users: Vec<UserArchetype>,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        Self {
            max_turns: 5,
            success_top_k: 3,
            dwell_per_grade: 15.0,
            budget_tokens: 3000,
            sessions_per_user: 2,
            corpus: CorpusGenConfig::default(),
            users: vec![
                UserArchetype {
                    name: "focused".into(),
                    count: 2,
                    preferred_domain: "software".into(),
                    topic: 0,
                    patience: 0.7,
                    success_min_grade: 3,
                    profile_concentration: 0.7,
                },
                UserArchetype {
                    name: "browser".into(),
                    count: 2,
                    preferred_domain: "health".into(),
                    topic: 1,
                    patience: 0.4,
                    success_min_grade: 3,
                    profile_concentration: 0.5,
                },
                UserArchetype {
                    name: "deep-diver".into(),
                    count: 1,
                    preferred_domain: "finance".into(),
                    topic: 2,
                    patience: 0.9,
                    success_min_grade: 4,
                    profile_concentration: 0.8,
                },
            ],
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusGenConfig {
    pub docs: usize,
    pub topics: usize,
    pub intents_per_topic: usize,
    /// Extra random filler tokens per document.
    pub noise_tokens: usize,
}

impl Default for CorpusGenConfig {
    fn default() -> Self {
        Self { docs: 500, topics: 8, intents_per_topic: 3, noise_tokens: 2 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UserArchetype {
    pub name: String,
    pub count: usize,
    pub preferred_domain: String,
    /// Topic index this archetype's sessions revolve around.
    pub topic: usize,
    /// Stop probability after a click.
    pub patience: f64,
    pub success_min_grade: u8,
    /// Weight of the dominant intent in the user's intent profile.
    pub profile_concentration: f64,
}

impl Config {
    /// Load from a `.toml` or `.json` file.
    pub fn load(path: &Path) -> Result<Self> {
        let raw = std::fs::read_to_string(path)?;
        let cfg: Config = match path.extension().and_then(|e| e.to_str()) {
            Some("json") => serde_json::from_str(&raw)?,
            _ => toml::from_str(&raw).map_err(|e| Error::Config(e.to_string()))?,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.persona.facet_dim == 0 {
            return Err(Error::Config("persona.facet_dim must be positive".into()));
        }
        if self.persona.personas.is_empty() {
            return Err(Error::Config("no personas configured".into()));
        }
        if self.context.lexical_dim == 0 || self.context.recency_dim == 0 {
            return Err(Error::Config("context slice dims must be positive".into()));
        }
        if self.arbiter.rrf_k0 <= 0.0 {
            return Err(Error::Config("arbiter.rrf_k0 must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.learning.epsilon) {
            return Err(Error::Config("learning.epsilon must lie in [0,1]".into()));
        }
        if self.learning.epsilon_floor <= 0.0 {
            return Err(Error::Config("learning.epsilon_floor must be positive".into()));
        }
        if self.coordinator.tau1 > self.coordinator.tau2 {
            return Err(Error::Config("coordinator.tau1 must not exceed tau2".into()));
        }
        for u in &self.simulation.users {
            if !(0.0 < u.patience && u.patience <= 1.0) {
                return Err(Error::Config(format!(
                    "archetype {}: patience must lie in (0,1]",
                    u.name
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_validates() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn d_phi_adds_up() {
        assert_eq!(ContextConfig::default().d_phi(), 64);
    }

    #[test]
    fn partial_toml_overlays_defaults() {
        let cfg: Config = toml::from_str("seed = 9\n[arbiter]\nrrf_k0 = 10.0\n").unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.arbiter.rrf_k0, 10.0);
        assert_eq!(cfg.memory.w_cap, 8);
    }

    #[test]
    fn bad_tau_order_rejected() {
        let mut cfg = Config::default();
        cfg.coordinator.tau1 = 0.9;
        assert!(cfg.validate().is_err());
    }
}
