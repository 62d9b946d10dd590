from .__meta__ import __version__

# Define the qlogic command-line usage. Experiments are either named on the command line with
# their options, or fully described by a JSON configuration file.
__doc__ = f"""
rsqlogic command line v{__version__}
Usage:
  qlogic <experiment> [--dim-s=N] [--dim-e=N] [--points=K] [--seed=S] [--tol=T] [--format=F] [options]
  qlogic --json=config-file [options]
  qlogic (-h | --help)
  qlogic (-v | --version)

Experiments:
  bvn-demo             Distributive law of the subspace lattice for spin-1/2
  conjunction          Both orders of the conjunction of conjugate propositions
  distributive-sweep   Interference term over a sweep of environment record overlaps
  entropy-trace        Entanglement entropy along a family of premeasurements
  naimark-check        Compressed POVM against joint PVM probabilities on random instances
  truth-table          Ternary truth values, excluded middle and material implication

Options:
  -h --help            Show this help message and exit
  -v --version         Display the current version and exit

  --dim-s=N            System dimension of the scalable experiments [default: 2]
  --dim-e=N            Environment dimension of the scalable experiments [default: 2]
  --points=K           Number of sweep points or random instances [default: 11]
  --seed=S             Seed of the random generator [default: 0]
  --tol=T              Set every numerical tolerance to T instead of the defaults
  --format=F           Report format, json or csv [default: json]
  --json=config-file   Read the whole experiment configuration from a JSON file

  -o --out=path        Write the report to a file instead of the standard output
  -q --quiet           Don't render the report table to the console
  -t --theme=string    Choose a predefined color theme for the console output (light or dark)
"""
