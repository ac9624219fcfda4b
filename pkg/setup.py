import setuptools 

with open("README.md", "r") as fh: 
	long_description = fh.read() 

setuptools.setup( 
	# Here is the module name. 
	name="JosephusFixed", 

	# version of the module 
	version="0.2.0", 

	# Name of Author 
	author="Plaraje (DMAM2)", 

	# your Email address 
	author_email="plaraje@proton.me", 

	description="Fixed points of the Josephus function, modular base 3/2 expansions and their congruences.",

	# Specifying that we are using markdown file for description 
	long_description=long_description, 
	long_description_content_type="text/markdown", 

	packages=setuptools.find_packages(), 

	python_requires=">=3.9",

    install_requires=[ 
        "Chromify", 
    ], 

    extras_require={
        "test": ["pytest", "hypothesis"],
    },

    entry_points={
        "console_scripts": ["josephus-fixed=JosephusFixed.main:run"],
    },

	license="GNU AFFERO GENERAL PUBLIC LICENSE", 

	# classifiers like program is suitable for python3, just leave as it is. 
	classifiers=[ 
		"Programming Language :: Python :: 3", 
		"Operating System :: OS Independent", 
	], 
) 
