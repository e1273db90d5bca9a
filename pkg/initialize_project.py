"""
Initialization script for the Romanian GEC corpus toolkit
Checks the shipped configuration and seed data and creates the working directories
"""
import os
import sys

# Add the project root to the path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.append(project_root)

from config.config import Config, load_toolkit_config
from src.llm.ces_store import load_ces_directory
from src.llm.llm_client import FixtureClient
from src.utils.errors import GecToolkitError


def initialize_project():
    """Prepare directories and verify config, CES seeds and LLM fixtures"""
    print("Initializing Romanian GEC corpus toolkit...")

    print("📁 Creating directories...")
    Config.ensure_directories()

    print("⚙️ Checking configuration...")
    try:
        config = load_toolkit_config(Config.CONFIG_PATH if os.path.exists(Config.CONFIG_PATH) else None)
        print(f"✅ Configuration valid ({len(config.taxonomy())} error types)")
    except GecToolkitError as e:
        print(f"❌ Configuration error: {e}")
        return False

    print("📚 Loading corruption example sets...")
    try:
        sets = load_ces_directory(config.get("llm.ces_dir"), config.taxonomy())
        for code, ces in sorted(sets.items()):
            print(f"   - {code}: {len(ces)} entries ({ces.initial_size} seed, capacity {ces.capacity})")
    except GecToolkitError as e:
        print(f"❌ CES error: {e}")
        return False

    if os.path.exists(Config.LLM_FIXTURES_PATH):
        fixtures = FixtureClient.from_file(Config.LLM_FIXTURES_PATH)
        print(f"✅ {len(fixtures)} recorded LLM exchanges available")
    else:
        print("⚠️ No LLM fixtures found; offline runs will fall back to noise injection")

    print("\nProject initialization complete!")
    print("\nNext steps:")
    print("1. Put OPENAI_API_KEY in .env for live LLM generation")
    print("2. python scripts/gec_toolkit_cli.py --help")
    return True


if __name__ == "__main__":
    sys.exit(0 if initialize_project() else 1)
