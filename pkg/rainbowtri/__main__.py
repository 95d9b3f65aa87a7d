from rainbowtri.cli import main

main()
