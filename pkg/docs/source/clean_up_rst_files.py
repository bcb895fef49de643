# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
Writes the rst pages of the examples and extracts the introduction from the README. Run it before sphinx-build.
"""

import glob
import os

current_dir = os.path.dirname(os.path.realpath(__file__))
repository_root = os.path.join(current_dir, "..", "..")

examples_index = os.path.join(current_dir, "fuzzydirac_examples.rst")
with open(examples_index, "w") as index_file:
    index_file.write("fuzzydirac\\_examples\n=========================================\n\n"
                     ".. toctree::\n   :maxdepth: 2\n\n")
    for example in sorted(glob.glob(os.path.join(repository_root, "fuzzydirac_examples", "*.py"))):
        example_name = os.path.basename(example).replace(".py", "")
        if example_name == "__init__":
            continue
        with open(os.path.join(current_dir, example_name + ".rst"), "w") as example_file:
            example_file.write(f"{example_name}\n=========================================\n\n"
                               f".. literalinclude:: ../../fuzzydirac_examples/{example_name}.py\n"
                               f"   :language: python\n   :lines: 1-\n\n")
        index_file.write(f"   {example_name}\n")

with open(os.path.join(repository_root, "README.md"), "r") as in_file:
    readme_lines = in_file.readlines()

start_line_idx = readme_lines.index("# Getting started\n")
end_line_idx = readme_lines.index("# Documentation\n")
with open(os.path.join(current_dir, "introduction.md"), "w") as intro_md:
    intro_md.writelines(line.replace("](fuzzydirac_examples/", "](../../fuzzydirac_examples/")
                        for line in readme_lines[start_line_idx:end_line_idx])
