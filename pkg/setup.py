import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open('requirements.txt') as f:
    requirements: list = f.read().splitlines()

setuptools.setup(
    name='pucci',
    version='0.1.0',
    license='apache-2.0',
    description='Ideogram-key interlingua translation from Italian to French, '
                'with diff and metric evaluation',
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=['machine translation', 'interlingua', 'rule-based', 'BLEU',
              'chrF', 'METEOR'],
    packages=setuptools.find_packages(include=['pucci', 'pucci.*']),
    package_data={'pucci': ['data/*.tsv', 'data/fixtures/*']},
    install_requires=requirements,
    entry_points={
        'console_scripts': ['pucci = pucci.cli:main'],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Text Processing :: Linguistic',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3',
    ],
    python_requires=">=3.6",
)
