"""Real-time event detection for high-volume short-message streams.

The package covers the full loop: a deterministic stream simulator with
human-reaction and delivery-constraint models (`simgen`, `scenarios`),
per-second aggregation (`buckets`), lexicon-based message understanding
(`lexicon`), adaptive sliding-window burst detection in two-stage and
unified forms (`detect`, `unified`), an incremental engine (`pipeline`),
an evaluation harness with a brute-force oracle (`evaluate`), and a
long-running service with JSON endpoints (`service`, `cli`).
"""

from .buckets import TimeBucketStore
from .detect import (
    TWO_STAGE,
    UNIFIED,
    DetectedEvent,
    DetectorConfig,
    TriggerWindow,
    detect_step,
    recognize,
    two_stage_step,
)
from .errors import ConfigError, OutOfRetention, ParseError, SourceError
from .evaluate import (
    ConfusionMatrix,
    DelayStats,
    Matching,
    RocPoint,
    adaptive_dominates,
    brute_force_oracle,
    confusion_matrix,
    delay_stats,
    evaluate_run,
    match_events,
    roc_sweep,
    window_size_distribution,
    write_roc_csv,
)
from .lexicon import (
    REAL_EVENT_TYPES,
    EventType,
    GameLexicon,
    LexiconSet,
    attribute_games,
    match_event_keywords,
    preprocess,
)
from .pipeline import (
    StreamPipeline,
    build_store_from_trace,
    evaluation_seconds,
    run_trace,
)
from .scenarios import (
    ROC_THRESHOLDS,
    LabeledCorpus,
    LabeledMessage,
    corpus_metrics,
    default_games,
    labeled_corpus,
    random_scenario,
    regular_season,
    standard_game,
    superbowl,
)
from .service import (
    EVENTS_SCHEMA,
    GAMES_SCHEMA,
    TIMELINE_SCHEMA,
    EventPulseService,
    RawMessage,
    ServiceConfig,
    SourceSpec,
    batch_events,
    load_games,
    load_service_config,
    read_event_log,
    register_adapter,
    resolve_scenario,
    save_games,
    write_event_log,
)
from .simgen import (
    ApiProfile,
    GameScenario,
    HumanDelayModel,
    NoiseProfile,
    Scenario,
    TextKnobs,
    TruthEvent,
    Tweet,
    TweetTrace,
    apply_api_constraints,
    generate,
    load_scenario,
    read_trace,
    save_scenario,
    scenario_from_doc,
    scenario_to_doc,
    write_trace,
)
from .unified import unified_step

__version__ = "0.1.0"

__all__ = [
    "ApiProfile",
    "ConfigError",
    "ConfusionMatrix",
    "DelayStats",
    "DetectedEvent",
    "DetectorConfig",
    "EVENTS_SCHEMA",
    "EventPulseService",
    "EventType",
    "GAMES_SCHEMA",
    "GameLexicon",
    "GameScenario",
    "HumanDelayModel",
    "LabeledCorpus",
    "LabeledMessage",
    "LexiconSet",
    "Matching",
    "NoiseProfile",
    "OutOfRetention",
    "ParseError",
    "RawMessage",
    "REAL_EVENT_TYPES",
    "ROC_THRESHOLDS",
    "RocPoint",
    "Scenario",
    "ServiceConfig",
    "SourceError",
    "SourceSpec",
    "StreamPipeline",
    "TIMELINE_SCHEMA",
    "TWO_STAGE",
    "TextKnobs",
    "TimeBucketStore",
    "TriggerWindow",
    "TruthEvent",
    "Tweet",
    "TweetTrace",
    "UNIFIED",
    "adaptive_dominates",
    "apply_api_constraints",
    "attribute_games",
    "batch_events",
    "brute_force_oracle",
    "build_store_from_trace",
    "confusion_matrix",
    "corpus_metrics",
    "default_games",
    "delay_stats",
    "detect_step",
    "evaluate_run",
    "evaluation_seconds",
    "generate",
    "labeled_corpus",
    "load_games",
    "load_scenario",
    "load_service_config",
    "match_event_keywords",
    "match_events",
    "preprocess",
    "random_scenario",
    "read_event_log",
    "read_trace",
    "recognize",
    "register_adapter",
    "regular_season",
    "resolve_scenario",
    "roc_sweep",
    "run_trace",
    "save_games",
    "save_scenario",
    "scenario_from_doc",
    "scenario_to_doc",
    "standard_game",
    "superbowl",
    "two_stage_step",
    "unified_step",
    "window_size_distribution",
    "write_event_log",
    "write_roc_csv",
    "write_trace",
]
