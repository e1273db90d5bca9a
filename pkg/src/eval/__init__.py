from .gec_scorer import Edit, apply_edits, extract_edits, score_gec
from .gecd import SEP_TOKEN, parse_gecd_input, serialize_gecd_input
from .ged_scorer import TagCounts, score_ged, tally_ged
from .metrics import Metrics, f_beta, metrics_from_counts
from .reports import DecodingInfo, ScoreReport
from .score_io import read_sentences, read_tag_sequences
